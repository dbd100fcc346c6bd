#include "test_support.hpp"

using namespace mdi;
using mdi::test::expect_matrix_near;

namespace {

const ComplexMatrix& hz() {
  static const ComplexMatrix h = build_hamiltonian(DipoleAxis::z());
  return h;
}

PureState ket(std::initializer_list<cplx> amps) { return PureState::normalized(std::span<const cplx>(amps.begin(), amps.size())); }

}  // namespace

TEST(Propagator, TrivialCases) {
  expect_matrix_near(propagator(hz(), 0.0), ComplexMatrix::identity(4), 1e-14);
  expect_matrix_near(propagator(hz(), kPi) * propagator(hz(), -kPi), ComplexMatrix::identity(4), 1e-12);
}

TEST(Propagator, DiagonalInBellBasis) {
  const double t = 0.83;
  const ComplexMatrix u = propagator(hz(), t);
  const std::pair<BellKind, cplx> cases[] = {{BellKind::psi_plus, std::polar(1.0, -2.0 * t)},
                                             {BellKind::psi_minus, 1.0},
                                             {BellKind::phi_plus, std::polar(1.0, t)},
                                             {BellKind::phi_minus, std::polar(1.0, t)}};
  for (auto [kind, phase] : cases) {
    const PureState b = bell_state(kind);
    for (std::size_t i = 0; i < 4; ++i) {
      cplx ub{0.0, 0.0};
      for (std::size_t j = 0; j < 4; ++j) ub += u(i, j) * b[j];
      EXPECT_LT(std::abs(ub - phase * b[i]), 1e-12);
    }
  }
}

TEST(EvolvePureNumeric, BasicTrajectories) {
  const PureState s00{1.0, 0.0, 0.0, 0.0};
  EXPECT_LT(phase_insensitive_distance(evolve_pure_numeric(s00, hz(), 0.0).pure(), s00), 1e-14);
  for (double t : {0.2, 1.3, 7.0}) {
    const PureState out = evolve_pure_numeric(s00, hz(), t).pure();
    EXPECT_LT(phase_insensitive_distance(out, s00), 1e-12);
    EXPECT_NEAR(concurrence_pure(out), 0.0, 1e-12);
  }
  const PureState s01{0.0, 1.0, 0.0, 0.0};
  const PureState expected = ket({0.0, 1.0, cplx{0.0, -1.0}, 0.0});
  EXPECT_LT(phase_insensitive_distance(evolve_pure_numeric(s01, hz(), kPi / 4).pure(), expected), 1e-12);
}

TEST(EvolveDensityNumeric, MaximallyMixedIsStationaryAndPurityPreserved) {
  const ComplexMatrix mixed = 0.25 * ComplexMatrix::identity(4);
  expect_matrix_near(evolve_density_numeric(mixed, hz(), 2.1).density(), mixed, 1e-14);
  std::mt19937_64 rng(61);
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix rho = test::random_density(rng);
    EXPECT_NEAR(purity(evolve_density_numeric(rho, hz(), 0.3 * i).density()), purity(rho), 1e-12);
  }
}

TEST(EvolveDensityNumeric, DepolarizedEvolutionSplits) {
  const double w = 0.3, p = 0.6, t = 1.7;
  const ComplexMatrix rho_d = depolarize(partial_entangled(w).projector(), p);
  const ComplexMatrix expected = depolarize(analytic_entangled(w, t).pure().projector(), p);
  EXPECT_LT(frobenius_distance(evolve_density_numeric(rho_d, hz(), t).density(), expected), 1e-10);
}

TEST(AnalyticPure, InitialTimeIsTheProduct) {
  const PureState psi = analytic_pure(1.1, 4.2, 0.0).pure();
  EXPECT_LT(phase_insensitive_distance(psi, product_state(pure_qubit(1.1), pure_qubit(4.2))), 1e-15);
}

TEST(AnalyticPure, OneZeroProductAtQuarterPeriod) {
  const PureState expected = ket({0.0, 1.0, cplx{0.0, -1.0}, 0.0});
  EXPECT_LT(phase_insensitive_distance(analytic_pure(0.0, kPi, kPi / 4).pure(), expected), 1e-12);
}

TEST(AnalyticPure, MatchesPropagatorOnRandomDraws) {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi), time(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double ta = ang(rng), tb = ang(rng), t = time(rng);
    const PureState numeric = evolve_pure_numeric(product_state(pure_qubit(ta), pure_qubit(tb)), hz(), t).pure();
    EXPECT_LT(phase_insensitive_distance(analytic_pure(ta, tb, t).pure(), numeric), 1e-10);
  }
}

TEST(AnalyticRho3, SpecialValues) {
  expect_matrix_near(analytic_rho3(0.0, 0.0, 1.234).density(), 0.25 * ComplexMatrix::identity(4), 1e-15);
  // |01> evolves to (|01> - i|10>)/sqrt(2) at t = pi/4.
  const ComplexMatrix rho = analytic_rho3(1.0, -1.0, kPi / 4).density();
  const PureState expected = ket({0.0, 1.0, cplx{0.0, -1.0}, 0.0});
  expect_matrix_near(rho, expected.projector(), 1e-15);
  EXPECT_NEAR(concurrence_mixed(rho), 1.0, 1e-12);
  EXPECT_NEAR(purity(rho), 1.0, 1e-15);
}

TEST(AnalyticRho3, MatchesPropagatorOnRandomDraws) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> r(-1.0, 1.0), time(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double a = r(rng), b = r(rng), t = time(rng);
    const ComplexMatrix rho0 = kron(bloch_mixed(BlochAxis::z, a), bloch_mixed(BlochAxis::z, b));
    EXPECT_LT(frobenius_distance(analytic_rho3(a, b, t).density(), evolve_density_numeric(rho0, hz(), t).density()), 1e-10);
  }
}

TEST(AnalyticRho1, SpecialValues) {
  expect_matrix_near(analytic_rho1(0.0, 0.0, 0.77).density(), 0.25 * ComplexMatrix::identity(4), 1e-15);
  const PureState plus = pure_qubit(kPi / 2);
  expect_matrix_near(analytic_rho1(1.0, 1.0, 0.0).density(), product_state(plus, plus).projector(), 1e-15);
}

TEST(AnalyticRho1, MatchesPropagatorOnRandomDraws) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> r(-1.0, 1.0), time(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double a = r(rng), b = r(rng), t = time(rng);
    const ComplexMatrix rho0 = kron(bloch_mixed(BlochAxis::x, a), bloch_mixed(BlochAxis::x, b));
    EXPECT_LT(frobenius_distance(analytic_rho1(a, b, t).density(), evolve_density_numeric(rho0, hz(), t).density()), 1e-10);
  }
}

TEST(AnalyticEntangled, SpecialValues) {
  for (double t : {0.0, 0.4, 2.5})
    EXPECT_LT(phase_insensitive_distance(analytic_entangled(0.5, t).pure(), bell_state(BellKind::psi_plus)), 1e-12);
  const PureState expected = ket({0.0, 1.0, cplx{0.0, -1.0}, 0.0});
  EXPECT_LT(phase_insensitive_distance(analytic_entangled(1.0, kPi / 4).pure(), expected), 1e-12);
  for (double w : {0.0, 0.2, 0.9})
    for (int n = 0; n < 4; ++n)
      EXPECT_NEAR(concurrence_pure(analytic_entangled(w, (2 * n + 1) * kPi / 4).pure()), 1.0, 1e-12);
}

TEST(AnalyticEntangled, SupportAndAgreementWithPropagator) {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> u(0.0, 1.0), time(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double w = u(rng), t = time(rng);
    const PureState psi = analytic_entangled(w, t).pure();
    EXPECT_EQ(psi[0], cplx{});
    EXPECT_EQ(psi[3], cplx{});
    EXPECT_LT(phase_insensitive_distance(psi, evolve_pure_numeric(partial_entangled(w), hz(), t).pure()), 1e-10);
  }
}

TEST(Dynamics, ExcitationNumberIsConserved) {
  std::mt19937_64 rng(83);
  const ComplexMatrix nz = pauli::total_z();
  for (int i = 0; i < 50; ++i) {
    const PureState psi0 = random_pure_state(rng);
    const double n0 = expectation(nz, psi0).real();
    for (double t : {0.1, 0.9, 3.3, 12.0})
      EXPECT_NEAR(expectation(nz, evolve_pure_numeric(psi0, hz(), t).pure()).real(), n0, 1e-10);
  }
}

TEST(Dynamics, PureConcurrenceHasPeriodPi) {
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi), time(0.0, kPi);
  for (int i = 0; i < 200; ++i) {
    const double ta = ang(rng), tb = ang(rng), t = time(rng);
    EXPECT_NEAR(concurrence_pure(analytic_pure(ta, tb, t).pure()), concurrence_pure(analytic_pure(ta, tb, t + kPi).pure()),
                1e-10);
  }
}

TEST(Dynamics, CollectiveZRotationLeavesGeneratedEntanglementUnchanged) {
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi), time(0.0, kPi);
  for (int i = 0; i < 100; ++i) {
    const PureState psi0 = product_state(pure_qubit(ang(rng)), pure_qubit(ang(rng)));
    const double delta = ang(rng), t = time(rng);
    const PureState rotated = apply(kron(rz(delta), rz(delta)), psi0);
    EXPECT_NEAR(concurrence_pure(evolve_pure_numeric(rotated, hz(), t).pure()),
                concurrence_pure(evolve_pure_numeric(psi0, hz(), t).pure()), 1e-10);
  }
}

TEST(Dynamics, AxisChangeEqualsConjugatedPropagator) {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> time(-4.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    const LocalRotation rot = test::random_rotation(rng);
    const ComplexMatrix vv = kron(su2_matrix(rot), su2_matrix(rot));
    const DipoleAxis rotated(normalized(rot.rotate({0.0, 0.0, 1.0})));
    const PureState psi0 = random_pure_state(rng);
    const double t = time(rng);
    const PureState direct = evolve_pure_numeric(psi0, build_hamiltonian(rotated), t).pure();
    const PureState via = apply(vv * propagator(hz(), t) * adjoint(vv), psi0);
    EXPECT_LT(phase_insensitive_distance(direct, via), 1e-10);
  }
}

TEST(Dynamics, RotatedAxisTurnsZeroZeroIntoMaximalEntangler) {
  // With the axis turned to x, |00> behaves like |++> under the z-axis coupling.
  const PureState s00{1.0, 0.0, 0.0, 0.0};
  const ComplexMatrix hx = build_hamiltonian(DipoleAxis({1.0, 0.0, 0.0}));
  double best_z = 0.0, best_x = 0.0;
  for (int k = 0; k <= 600; ++k) {
    const double t = kPi * k / 600.0;
    best_z = std::max(best_z, concurrence_pure(evolve_pure_numeric(s00, hz(), t).pure()));
    best_x = std::max(best_x, concurrence_pure(evolve_pure_numeric(s00, hx, t).pure()));
  }
  EXPECT_NEAR(best_z, 0.0, 1e-12);
  EXPECT_NEAR(best_x, 1.0, 1e-9);
}

TEST(Evolve, DispatchUsesClosedFormOnZAxisAndScalesTimeByCoupling) {
  const StateSpec spec = PureProduct{0.7, 2.9};
  const EvolvedResult a = evolve(spec, DipoleAxis::z(2.0), 0.4);
  EXPECT_EQ(a.path, EvolutionPath::analytic);
  EXPECT_LT(phase_insensitive_distance(a.pure(), analytic_pure(0.7, 2.9, 0.8).pure()), 1e-15);
  const EvolvedResult n = evolve(spec, DipoleAxis({0.0, 0.0, 1.0}, 2.0), 0.4);
  EXPECT_LT(phase_insensitive_distance(n.pure(), evolve_numeric(spec, DipoleAxis::z(2.0), 0.4).pure()), 1e-10);
  const EvolvedResult tilted = evolve(spec, DipoleAxis({0.6, 0.0, 0.8}), 0.4);
  EXPECT_EQ(tilted.path, EvolutionPath::numeric);
}
