#include "test_support.hpp"

using namespace mdi;
using mdi::test::expect_matrix_near;

namespace {

void expect_density(const ComplexMatrix& rho) {
  EXPECT_TRUE(is_hermitian(rho, 1e-12));
  EXPECT_NEAR(trace(rho).real(), 1.0, 1e-12);
  EXPECT_GT(hermitian_eig(rho).eigenvalues[0], -1e-12);
}

}  // namespace

TEST(PureQubit, PolesAndEquator) {
  EXPECT_LT(phase_insensitive_distance(pure_qubit(0.0), PureState{1.0, 0.0}), 1e-15);
  EXPECT_LT(phase_insensitive_distance(pure_qubit(kPi), PureState{0.0, 1.0}), 1e-15);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(pure_qubit(kPi / 2)[0].real(), h, 1e-15);
  EXPECT_NEAR(pure_qubit(kPi / 2)[1].real(), h, 1e-15);
}

TEST(PureQubit, RejectsOutOfRangeAngle) {
  EXPECT_THROW(pure_qubit(-0.1), std::invalid_argument);
  EXPECT_THROW(pure_qubit(2.0 * kPi + 1e-9), std::invalid_argument);
  EXPECT_NO_THROW(pure_qubit(2.0 * kPi));
}

TEST(ProductState, BasisOrdering) {
  const PureState s = product_state(pure_qubit(0.0), pure_qubit(kPi));
  EXPECT_NEAR(std::abs(s[1]), 1.0, 1e-15);
  const PureState pp = product_state(pure_qubit(kPi / 2), pure_qubit(kPi / 2));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(pp[i].real(), 0.5, 1e-15);
}

TEST(ProductState, AlwaysSeparable) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  for (int i = 0; i < 100; ++i)
    EXPECT_NEAR(concurrence_pure(product_state(pure_qubit(ang(rng)), pure_qubit(ang(rng)))), 0.0, 1e-15);
}

TEST(BlochMixed, LimitsAndPurity) {
  expect_matrix_near(bloch_mixed(BlochAxis::z, 1.0), PureState{1.0, 0.0}.projector(), 1e-15);
  expect_matrix_near(bloch_mixed(BlochAxis::x, 0.0), 0.5 * pauli::s0(), 1e-15);
  EXPECT_NEAR(purity(bloch_mixed(BlochAxis::z, 0.6)), 0.68, 1e-15);
  for (double r : {-1.0, -0.3, 0.0, 0.45, 1.0}) {
    EXPECT_NEAR(purity(bloch_mixed(BlochAxis::x, r)), 0.5 * (1.0 + r * r), 1e-15);
    EXPECT_NEAR(l1_coherence(bloch_mixed(BlochAxis::x, r)), std::abs(r), 1e-15);
    EXPECT_NEAR(l1_coherence(bloch_mixed(BlochAxis::z, r)), 0.0, 1e-15);
  }
  EXPECT_THROW(bloch_mixed(BlochAxis::x, 1.01), std::invalid_argument);
}

TEST(BlochMixed, PurityMonotoneInAbsR) {
  double prev = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double r = k / 100.0;
    const double p = purity(bloch_mixed(BlochAxis::z, -r));
    EXPECT_GE(p, prev);
    prev = p;
  }
}

TEST(PartialEntangled, SpecialValues) {
  EXPECT_NEAR(std::abs(partial_entangled(1.0)[1]), 1.0, 1e-15);
  EXPECT_LT(phase_insensitive_distance(partial_entangled(0.5), bell_state(BellKind::psi_plus)), 1e-15);
  EXPECT_NEAR(concurrence_pure(partial_entangled(0.5)), 1.0, 1e-15);
  EXPECT_NEAR(concurrence_pure(partial_entangled(0.25)), std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_NEAR(concurrence_mixed(partial_entangled(0.25).projector()), std::sqrt(3.0) / 2.0, 1e-12);
  EXPECT_THROW(partial_entangled(1.5), std::invalid_argument);
}

TEST(PartialEntangled, SwapSymmetry) {
  for (double w : {0.0, 0.1, 0.37, 0.8}) {
    const PureState a = partial_entangled(w), b = partial_entangled(1.0 - w);
    EXPECT_NEAR(std::abs(a[1] - b[2]), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a[2] - b[1]), 0.0, 1e-15);
    EXPECT_NEAR(concurrence_pure(a), concurrence_pure(b), 1e-15);
    EXPECT_EQ(a[0], cplx{});
    EXPECT_EQ(a[3], cplx{});
  }
}

TEST(Depolarize, EndpointsAndWernerThreshold) {
  const ComplexMatrix rho = partial_entangled(0.3).projector();
  expect_matrix_near(depolarize(rho, 1.0), rho, 1e-15);
  expect_matrix_near(depolarize(rho, 0.0), 0.25 * ComplexMatrix::identity(4), 1e-15);
  const ComplexMatrix singlet = bell_state(BellKind::psi_minus).projector();
  EXPECT_NEAR(concurrence_mixed(depolarize(singlet, 1.0 / 3.0)), 0.0, 1e-12);
  EXPECT_THROW(depolarize(rho, -0.1), std::invalid_argument);
}

TEST(BellStates, AmplitudesAndEntanglement) {
  const double h = 1.0 / std::sqrt(2.0);
  const PureState psi_m = bell_state(BellKind::psi_minus);
  EXPECT_NEAR(psi_m[1].real(), h, 1e-15);
  EXPECT_NEAR(psi_m[2].real(), -h, 1e-15);
  for (auto k : {BellKind::psi_plus, BellKind::psi_minus, BellKind::phi_plus, BellKind::phi_minus})
    EXPECT_NEAR(concurrence_pure(bell_state(k)), 1.0, 1e-15);
}

TEST(StateSpec, EveryFamilyYieldsValidDensity) {
  const StateSpec specs[] = {PureProduct{1.0, 4.0}, BlochMixed{BlochAxis::x, 0.4, -0.9},
                             BlochMixed{BlochAxis::z, -1.0, 1.0}, PartialEntangled{0.2}, Depolarized{0.7, 0.35}};
  for (const auto& s : specs) expect_density(initial_density(s));
}

TEST(StateSpec, ParsesCanonicalForms) {
  const auto p = std::get<PureProduct>(parse_state_spec("pure:theta_a=1.5708,theta_b=1.5708"));
  EXPECT_DOUBLE_EQ(p.theta_a, 1.5708);
  const auto m = std::get<BlochMixed>(parse_state_spec("mixed:axis=z,ra=0.5,rb=-0.5"));
  EXPECT_EQ(m.axis, BlochAxis::z);
  EXPECT_DOUBLE_EQ(m.rb, -0.5);
  EXPECT_DOUBLE_EQ(std::get<PartialEntangled>(parse_state_spec("ent:w=0.25")).w, 0.25);
  const auto d = std::get<Depolarized>(parse_state_spec("depol:w=0.25,p=0.8"));
  EXPECT_DOUBLE_EQ(d.p, 0.8);
}

TEST(StateSpec, TextRoundTrip) {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const StateSpec specs[] = {PureProduct{2.0 * kPi * u(rng), 2.0 * kPi * u(rng)},
                               BlochMixed{i % 2 ? BlochAxis::x : BlochAxis::z, 2.0 * u(rng) - 1.0, 2.0 * u(rng) - 1.0},
                               PartialEntangled{u(rng)}, Depolarized{u(rng), u(rng)}};
    for (const auto& s : specs) {
      const std::string text = format_state_spec(s);
      EXPECT_EQ(format_state_spec(parse_state_spec(text)), text);
    }
  }
}

TEST(StateSpec, ParseErrorsNameTheField) {
  auto message = [](const char* text) {
    try {
      parse_state_spec(text);
    } catch (const SpecParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("pure:theta_a=abc,theta_b=1").find("theta_a"), std::string::npos);
  EXPECT_NE(message("pure:theta_a=1").find("theta_b"), std::string::npos);
  EXPECT_NE(message("mixed:axis=y,ra=0,rb=0").find("axis"), std::string::npos);
  EXPECT_NE(message("ent:w=2").find("w"), std::string::npos);
  EXPECT_NE(message("ent:w=0.5,q=1").find("q"), std::string::npos);
  EXPECT_NE(message("bogus:w=1").find("bogus"), std::string::npos);
  EXPECT_NE(message("w=1").find("family"), std::string::npos);
}

TEST(StateSpec, PreRotationStandsInForRelativePhase) {
  // R_z(delta) on each dipole adds a relative phase e^{i delta} between |0>, |1>.
  const double delta = 0.9;
  const PureState base = product_state(pure_qubit(1.2), pure_qubit(2.3));
  const LocalRotation r({0.0, 0.0, 1.0}, delta);
  const PureState rotated = pre_rotate(base, r, r);
  const std::array<cplx, 2> a{std::cos(0.6), std::sin(0.6) * std::polar(1.0, delta)};
  const std::array<cplx, 2> b{std::cos(1.15), std::sin(1.15) * std::polar(1.0, delta)};
  EXPECT_LT(phase_insensitive_distance(rotated, kron(PureState(a), PureState(b))), 1e-12);
}
