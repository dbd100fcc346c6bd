#pragma once

// Self-checks bundled with the library: closed forms against the generic
// propagator, symmetries of sweep surfaces, and thermal-state
// invariance under changes of dipole orientation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mdi/dynamics.hpp"
#include "mdi/measures.hpp"
#include "mdi/model.hpp"
#include "mdi/states.hpp"
#include "mdi/sweep.hpp"

namespace mdi {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  bool passed = false;
};

using CheckSuite = std::vector<CheckResult>;

inline bool all_passed(const CheckSuite& suite) {
  return std::all_of(suite.begin(), suite.end(), [](const CheckResult& c) { return c.passed; });
}

/// Uniformly distributed unit vector.
template <typename Rng>
Vec3 random_unit_vector(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  while (true) {
    const Vec3 v{g(rng), g(rng), g(rng)};
    if (norm(v) > 1e-6) return normalized(v);
  }
}

template <typename Rng>
PureState random_pure_state(Rng& rng, std::size_t dim = 4) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::array<cplx, 4> amps{};
  for (std::size_t i = 0; i < dim; ++i) amps[i] = {g(rng), g(rng)};
  return PureState::normalized(std::span<const cplx>(amps.data(), dim));
}

namespace detail {

inline CheckResult sample_max(std::string name, double tol, std::size_t draws,
                              const std::function<double(std::size_t)>& err) {
  CheckResult r{std::move(name), 0.0, tol, draws, false};
  for (std::size_t i = 0; i < draws; ++i) r.max_error = std::max(r.max_error, err(i));
  r.passed = r.max_error < tol;
  return r;
}

}  // namespace detail

/// Closed-form states and measures against numeric oracles on random draws.
inline CheckSuite run_oracle_suite(std::size_t draws = 1000, std::uint64_t seed = 20190611) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> bloch(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> time(-kPi, 3.0 * kPi);
  const ComplexMatrix h = build_hamiltonian(DipoleAxis::z());

  CheckSuite suite;
  suite.push_back(detail::sample_max("evolved pure product: closed form vs propagator", 1e-10, draws, [&](std::size_t) {
    const double ta = angle(rng), tb = angle(rng), t = time(rng);
    const PureState psi0 = product_state(pure_qubit(ta), pure_qubit(tb));
    return phase_insensitive_distance(analytic_pure(ta, tb, t).pure(), evolve_pure_numeric(psi0, h, t).pure());
  }));
  suite.push_back(detail::sample_max("evolved z-mixed product: closed form vs propagator", 1e-10, draws, [&](std::size_t) {
    const double a = bloch(rng), b = bloch(rng), t = time(rng);
    const ComplexMatrix rho0 = kron(bloch_mixed(BlochAxis::z, a), bloch_mixed(BlochAxis::z, b));
    return frobenius_distance(analytic_rho3(a, b, t).density(), evolve_density_numeric(rho0, h, t).density());
  }));
  suite.push_back(detail::sample_max("evolved x-mixed product: closed form vs propagator", 1e-10, draws, [&](std::size_t) {
    const double a = bloch(rng), b = bloch(rng), t = time(rng);
    const ComplexMatrix rho0 = kron(bloch_mixed(BlochAxis::x, a), bloch_mixed(BlochAxis::x, b));
    return frobenius_distance(analytic_rho1(a, b, t).density(), evolve_density_numeric(rho0, h, t).density());
  }));
  suite.push_back(detail::sample_max("evolved partially entangled state: closed form vs propagator", 1e-10, draws,
                                     [&](std::size_t) {
                                       const double w = unit(rng), t = time(rng);
                                       return phase_insensitive_distance(
                                           analytic_entangled(w, t).pure(),
                                           evolve_pure_numeric(partial_entangled(w), h, t).pure());
                                     }));
  suite.push_back(detail::sample_max("evolved depolarized state: closed form vs propagator", 1e-10, draws,
                                     [&](std::size_t) {
                                       const double w = unit(rng), p = unit(rng), t = time(rng);
                                       const ComplexMatrix rho0 = depolarize(partial_entangled(w).projector(), p);
                                       return frobenius_distance(analytic_depolarized(w, p, t).density(),
                                                                 evolve_density_numeric(rho0, h, t).density());
                                     }));
  suite.push_back(detail::sample_max("pure-product concurrence: f,g form vs amplitude form", 1e-10, draws,
                                     [&](std::size_t) {
                                       const double ta = angle(rng), tb = angle(rng), t = time(rng);
                                       const PureState psi0 = product_state(pure_qubit(ta), pure_qubit(tb));
                                       return std::abs(concurrence_fg(ta, tb, t) -
                                                       concurrence_pure(evolve_pure_numeric(psi0, h, t).pure()));
                                     }));
  suite.push_back(detail::sample_max("partially entangled concurrence: closed form vs amplitude form", 1e-10, draws,
                                     [&](std::size_t) {
                                       const double w = unit(rng), t = time(rng);
                                       return std::abs(concurrence_entangled_analytic(w, t) -
                                                       concurrence_pure(analytic_entangled(w, t).pure()));
                                     }));
  suite.push_back(detail::sample_max("reduced coherence of dipole a: closed form vs partial trace", 1e-10, draws,
                                     [&](std::size_t) {
                                       const double ta = angle(rng), tb = angle(rng), t = time(rng);
                                       const PureState psi0 = product_state(pure_qubit(ta), pure_qubit(tb));
                                       const ComplexMatrix rho = evolve_pure_numeric(psi0, h, t).pure().projector();
                                       return std::abs(reduced_coherence_analytic(ta, tb, t) -
                                                       l1_coherence(partial_trace(rho, Subsystem::first)));
                                     }));
  suite.push_back(detail::sample_max("mixed-state concurrence on pure inputs vs amplitude form", 1e-8, draws,
                                     [&](std::size_t) {
                                       const PureState psi = random_pure_state(rng);
                                       return std::abs(concurrence_mixed(psi.projector()) - concurrence_pure(psi));
                                     }));
  return suite;
}

inline CheckResult from_report(std::string name, const SymmetryReport& rep) {
  return {std::move(name), rep.max_mismatch, kSymmetryTol, rep.points, rep.passed};
}

/// Symmetry relations evaluated on sweep surfaces.
inline CheckSuite run_symmetry_suite(std::size_t grid = 101, unsigned threads = 1) {
  CheckSuite suite;
  const GridAxis ta{"theta_a", 0.0, 2.0 * kPi, grid};
  const GridAxis tb{"theta_b", 0.0, 2.0 * kPi, grid};

  SweepConfig period;
  period.family = Family::pure;
  period.axes = {ta, tb, {"t", 0.0, kPi, 50}};
  period.threads = threads;
  suite.push_back(from_report("concurrence period pi in t (theta_a x theta_b x t)", verify_symmetry(period, Symmetry::period_pi)));

  for (double phi : {kPi / 6.0, kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0}) {
    SweepConfig refl;
    refl.family = Family::pure;
    refl.fixed = {{"theta_b", kPi + phi}};
    refl.axes = {ta, {"t", 0.0, kPi, grid}};
    refl.threads = threads;
    suite.push_back(from_report("theta_b = pi+phi mirrors theta_b = pi-phi about theta_a = pi (phi=" + format_double(phi) + ")",
                                verify_symmetry(refl, Symmetry::theta_b_reflection)));
  }

  SweepConfig square;
  square.family = Family::pure;
  square.fixed = {{"t", kPi / 8.0}};
  square.axes = {ta, tb};
  square.threads = threads;
  suite.push_back(from_report("t = pi/8 surface is the t = 3pi/8 surface turned by pi/2",
                              verify_symmetry(square, Symmetry::quarter_turn)));

  for (double t : {0.3, kPi / 4.0, 1.1, 2.0}) {
    SweepConfig rho1;
    rho1.family = Family::mixed_x;
    rho1.fixed = {{"t", t}};
    rho1.axes = {{"ra", -1.0, 1.0, 41}, {"rb", -1.0, 1.0, 41}};
    rho1.threads = threads;
    suite.push_back(from_report("x-mixed concurrence: rb -> -rb mirrors ra -> -ra (t=" + format_double(t) + ")",
                                verify_symmetry(rho1, Symmetry::rho1_reflection)));
  }

  SweepConfig cov;
  cov.family = Family::pure;
  cov.axes = {{"theta_a", 0.0, 2.0 * kPi, 13}, {"theta_b", 0.0, 2.0 * kPi, 13}, {"t", 0.0, kPi, 9}};
  suite.push_back(from_report("R_z(delta) x R_z(delta) covariance of generated concurrence",
                              verify_symmetry(cov, Symmetry::rz_covariance)));
  return suite;
}

/// Gibbs-state concurrence for `axes` random dipole orientations at each beta.
inline CheckSuite run_thermal_suite(std::size_t axes = 20, std::vector<double> betas = {0.1, 1.0, 10.0},
                                    std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::vector<Vec3> dirs;
  for (std::size_t i = 0; i < axes; ++i) dirs.push_back(random_unit_vector(rng));

  CheckSuite suite;
  for (double beta : betas) {
    const ComplexMatrix ref = gibbs_state(build_hamiltonian(DipoleAxis::z()), beta);
    const double ref_c = concurrence_mixed(ref);
    const double ref_p = purity(ref);
    CheckResult c{"Gibbs concurrence independent of dipole axis (beta=" + format_double(beta) + ")", 0.0, 1e-10, axes};
    CheckResult p{"Gibbs purity independent of dipole axis (beta=" + format_double(beta) + ")", 0.0, 1e-10, axes};
    for (const auto& n : dirs) {
      const ComplexMatrix rho = gibbs_state(build_hamiltonian(DipoleAxis(n)), beta);
      c.max_error = std::max(c.max_error, std::abs(concurrence_mixed(rho) - ref_c));
      p.max_error = std::max(p.max_error, std::abs(purity(rho) - ref_p));
    }
    c.passed = c.max_error < c.tolerance;
    p.passed = p.max_error < p.tolerance;
    suite.push_back(c);
    suite.push_back(p);
  }
  return suite;
}

}  // namespace mdi
