#pragma once

// Time evolution under the dipolar Hamiltonian.
//
// Two independent routes are provided. The numeric route exponentiates any
// Hamiltonian through its eigendecomposition. The analytic route writes down
// the closed-form evolved states for n = z, D = 1 term by term, without
// algebraic simplification, so each can be checked against the numeric one.

#include <cmath>
#include <stdexcept>
#include <variant>

#include "mdi/linalg.hpp"
#include "mdi/model.hpp"
#include "mdi/states.hpp"

namespace mdi {

enum class EvolutionPath { analytic, numeric };

struct EvolvedResult {
  double time = 0.0;
  std::variant<PureState, ComplexMatrix> state;
  EvolutionPath path = EvolutionPath::numeric;

  bool is_pure() const noexcept { return std::holds_alternative<PureState>(state); }
  const PureState& pure() const { return std::get<PureState>(state); }
  const ComplexMatrix& density() const { return std::get<ComplexMatrix>(state); }

  /// Density matrix regardless of representation.
  ComplexMatrix rho() const { return is_pure() ? pure().projector() : density(); }
};

inline ComplexMatrix propagator(const ComplexMatrix& h, double t) { return expm_i(h, t); }

inline EvolvedResult evolve_pure_numeric(const PureState& psi0, const ComplexMatrix& h, double t) {
  return {t, apply(propagator(h, t), psi0), EvolutionPath::numeric};
}

inline EvolvedResult evolve_density_numeric(const ComplexMatrix& rho0, const ComplexMatrix& h, double t) {
  const ComplexMatrix u = propagator(h, t);
  ComplexMatrix rho = u * rho0 * adjoint(u);
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < rho.dim(); ++j) {
      const cplx avg = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
      rho(i, j) = avg;
      rho(j, i) = std::conj(avg);
    }
  }
  return {t, rho, EvolutionPath::numeric};
}

/// Evolved product of pure_qubit(theta_a) and pure_qubit(theta_b), up to a
/// global phase.
inline EvolvedResult analytic_pure(double theta_a, double theta_b, double t) {
  detail::require_range(theta_a, 0.0, 2.0 * kPi, "theta_a");
  detail::require_range(theta_b, 0.0, 2.0 * kPi, "theta_b");
  const double aa = std::cos(0.5 * theta_a), ba = std::sin(0.5 * theta_a);
  const double ab = std::cos(0.5 * theta_b), bb = std::sin(0.5 * theta_b);
  const double c = std::cos(t), s = std::sin(t);
  const cplx i{0.0, 1.0};
  const cplx e2 = std::exp(i * (2.0 * t));

  std::array<cplx, 4> amps{};
  amps[0] = e2 * (aa * ab);
  amps[1] = aa * bb * c - i * ba * ab * s;
  amps[2] = ba * ab * c - i * aa * bb * s;
  amps[3] = e2 * (ba * bb);
  return {t, PureState::normalized(amps), EvolutionPath::analytic};
}

namespace detail {

inline void add_outer(ComplexMatrix& m, cplx coeff, const PureState& ket, const PureState& bra) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) += coeff * ket[i] * std::conj(bra[j]);
}

}  // namespace detail

/// Evolved z-axis Bloch product, built entry by entry in the computational basis.
inline EvolvedResult analytic_rho3(double r3a, double r3b, double t) {
  detail::require_range(r3a, -1.0, 1.0, "r3a");
  detail::require_range(r3b, -1.0, 1.0, "r3b");
  const cplx i{0.0, 1.0};
  const double c2 = std::cos(2.0 * t), s2 = std::sin(2.0 * t);
  const double diff = r3a - r3b;

  ComplexMatrix four_rho(4);
  four_rho(0, 0) = (1.0 + r3a) * (1.0 + r3b);
  four_rho(1, 1) = 1.0 - r3a * r3b + diff * c2;
  four_rho(1, 2) = i * diff * s2;
  four_rho(2, 1) = -i * diff * s2;
  four_rho(2, 2) = 1.0 - r3a * r3b - diff * c2;
  four_rho(3, 3) = (1.0 - r3a) * (1.0 - r3b);
  return {t, 0.25 * four_rho, EvolutionPath::analytic};
}

/// Evolved x-axis Bloch product, assembled from Bell-basis outer products.
inline EvolvedResult analytic_rho1(double r1a, double r1b, double t) {
  detail::require_range(r1a, -1.0, 1.0, "r1a");
  detail::require_range(r1b, -1.0, 1.0, "r1b");
  const PureState psi_m = bell_state(BellKind::psi_minus);
  const PureState psi_p = bell_state(BellKind::psi_plus);
  const PureState phi_m = bell_state(BellKind::phi_minus);
  const PureState phi_p = bell_state(BellKind::phi_plus);
  const cplx i{0.0, 1.0};

  ComplexMatrix four_rho(4);
  detail::add_outer(four_rho, 1.0 - r1a * r1b, psi_m, psi_m);
  detail::add_outer(four_rho, 1.0 - r1a * r1b, phi_m, phi_m);
  detail::add_outer(four_rho, 1.0 + r1a * r1b, psi_p, psi_p);
  detail::add_outer(four_rho, 1.0 + r1a * r1b, phi_p, phi_p);
  detail::add_outer(four_rho, (r1b - r1a) * std::exp(i * t), phi_m, psi_m);
  detail::add_outer(four_rho, (r1b - r1a) * std::exp(-i * t), psi_m, phi_m);
  detail::add_outer(four_rho, (r1b + r1a) * std::exp(i * (3.0 * t)), phi_p, psi_p);
  detail::add_outer(four_rho, (r1b + r1a) * std::exp(-i * (3.0 * t)), psi_p, phi_p);
  return {t, 0.25 * four_rho, EvolutionPath::analytic};
}

/// Evolved sqrt(w)|01> + sqrt(1-w)|10>, up to a global phase.
inline EvolvedResult analytic_entangled(double w, double t) {
  detail::require_range(w, 0.0, 1.0, "w");
  const double sw = std::sqrt(w), sv = std::sqrt(1.0 - w);
  const double c = std::cos(t), s = std::sin(t);
  const cplx i{0.0, 1.0};
  std::array<cplx, 4> amps{};
  amps[1] = sw * c - i * sv * s;
  amps[2] = sv * c - i * sw * s;
  return {t, PureState::normalized(amps), EvolutionPath::analytic};
}

/// (1-p) I/4 + p |Psi_t><Psi_t| with Psi_t from analytic_entangled.
inline EvolvedResult analytic_depolarized(double w, double p, double t) {
  const ComplexMatrix rho = depolarize(analytic_entangled(w, t).pure().projector(), p);
  return {t, rho, EvolutionPath::analytic};
}

/// Dispatches a state family to its closed-form evolution (n = z, D = 1).
inline EvolvedResult evolve_analytic(const StateSpec& spec, double t) {
  validate(spec);
  return std::visit(
      [t](const auto& s) -> EvolvedResult {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PureProduct>)
          return analytic_pure(s.theta_a, s.theta_b, t);
        else if constexpr (std::is_same_v<T, BlochMixed>)
          return s.axis == BlochAxis::z ? analytic_rho3(s.ra, s.rb, t) : analytic_rho1(s.ra, s.rb, t);
        else if constexpr (std::is_same_v<T, PartialEntangled>)
          return analytic_entangled(s.w, t);
        else
          return analytic_depolarized(s.w, s.p, t);
      },
      spec);
}

/// Dispatches a state family to the generic propagator route for any axis.
inline EvolvedResult evolve_numeric(const StateSpec& spec, const DipoleAxis& axis, double t) {
  const ComplexMatrix h = build_hamiltonian(axis);
  if (is_pure(spec)) return evolve_pure_numeric(initial_pure_state(spec), h, t);
  return evolve_density_numeric(initial_density(spec), h, t);
}

/// Closed form when the axis is z (time rescaled by D), propagator otherwise.
inline EvolvedResult evolve(const StateSpec& spec, const DipoleAxis& axis, double t) {
  if (axis.is_z()) {
    EvolvedResult r = evolve_analytic(spec, axis.coupling_d() * t);
    r.time = t;
    return r;
  }
  return evolve_numeric(spec, axis, t);
}

}  // namespace mdi
