#pragma once

// Entanglement, coherence and purity quantifiers.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mdi/linalg.hpp"
#include "mdi/model.hpp"
#include "mdi/states.hpp"

namespace mdi {

struct MeasureReport {
  double concurrence = 0.0;
  double coherence_a = 0.0;
  double coherence_b = 0.0;
  double purity = 1.0;
  std::array<double, 4> wootters_lambdas{};  // descending
};

/// sigma_2 (x) sigma_2
inline ComplexMatrix spin_flip() { return kron(pauli::s2(), pauli::s2()); }

/// Throws invalid_argument unless rho is Hermitian, unit-trace and PSD.
inline void require_density_matrix(const ComplexMatrix& rho, double tol = kEigenTol) {
  if (!is_hermitian(rho, tol)) throw std::invalid_argument("density matrix is not Hermitian");
  const cplx tr = trace(rho);
  if (std::abs(tr - 1.0) > tol)
    throw std::invalid_argument("density matrix trace is " + std::to_string(tr.real()) + ", not 1");
  const EigenSystem es = hermitian_eig(rho);
  if (es.eigenvalues[0] < -1e-9)
    throw std::invalid_argument("density matrix has negative eigenvalue " + std::to_string(es.eigenvalues[0]));
}

/// 2 |a00 a11 - a01 a10|, i.e. |<psi| sigma_2 sigma_2 |psi*>|.
inline double concurrence_pure(const PureState& psi) {
  if (psi.dim() != 4) throw std::invalid_argument("concurrence_pure: state must be two-qubit");
  return std::min(1.0, 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]));
}

/// sqrt(f^2 + g^2) for the evolved product of pure_qubit(theta_a), pure_qubit(theta_b).
inline double concurrence_fg(double theta_a, double theta_b, double t) {
  detail::require_range(theta_a, 0.0, 2.0 * kPi, "theta_a");
  detail::require_range(theta_b, 0.0, 2.0 * kPi, "theta_b");
  const double aa = std::cos(0.5 * theta_a), ba = std::sin(0.5 * theta_a);
  const double ab = std::cos(0.5 * theta_b), bb = std::sin(0.5 * theta_b);
  const double prod = aa * ba * ab * bb;
  const double f = 2.0 * prod * (std::cos(2.0 * t) - std::cos(4.0 * t));
  const double g = (aa * aa * bb * bb + ba * ba * ab * ab) * std::sin(2.0 * t) + 2.0 * prod * std::sin(4.0 * t);
  return std::sqrt(f * f + g * g);
}

/// Square roots of the eigenvalues of rho (s2 s2) rho* (s2 s2), descending.
///
/// With rho = W W^dagger, where W holds the scaled eigenvectors sqrt(p_k) e_k,
/// these are the singular values of tau = W^dagger (s2 s2) W*. Computing them as
/// singular values avoids the square root of near-zero eigenvalues, which
/// would otherwise turn 1e-16 rounding into 1e-8 errors for pure states.
inline std::array<double, 4> wootters_roots(const ComplexMatrix& rho) {
  require_density_matrix(rho);
  const EigenSystem es = hermitian_eig(rho);
  ComplexMatrix w(4);
  for (std::size_t k = 0; k < 4; ++k) {
    const double scale = std::sqrt(std::max(es.eigenvalues[k], 0.0));
    for (std::size_t r = 0; r < 4; ++r) w(r, k) = es.eigenvectors(r, k) * scale;
  }
  const ComplexMatrix tau = adjoint(w) * spin_flip() * conjugate(w);
  return singular_values(tau);
}

inline std::array<double, 4> wootters_lambdas(const ComplexMatrix& rho) {
  auto roots = wootters_roots(rho);
  for (auto& r : roots) r *= r;
  return roots;
}

/// max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)).
inline double concurrence_mixed(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("concurrence_mixed: operator must be 4x4");
  const auto s = wootters_roots(rho);
  return std::clamp(s[0] - s[1] - s[2] - s[3], 0.0, 1.0);
}

/// Sum of absolute off-diagonal entries in the computational basis.
inline double l1_coherence(const ComplexMatrix& rho) {
  double c = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j)
      if (i != j) c += std::abs(rho(i, j));
  return c;
}

inline double l1_coherence(const PureState& psi) { return l1_coherence(psi.projector()); }

inline double purity(const ComplexMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double p = 0.0;
  for (const auto& z : rho.entries()) p += std::norm(z);
  return p;
}

inline double concurrence_entangled_analytic(double w, double t) {
  detail::require_range(w, 0.0, 1.0, "w");
  const double s2 = std::sin(2.0 * t), c2 = std::cos(2.0 * t);
  return std::sqrt(s2 * s2 + 4.0 * w * (1.0 - w) * c2 * c2);
}

/// l1 coherence of dipole a's reduced state for the evolved pure product.
inline double reduced_coherence_analytic(double theta_a, double theta_b, double t) {
  detail::require_range(theta_a, 0.0, 2.0 * kPi, "theta_a");
  detail::require_range(theta_b, 0.0, 2.0 * kPi, "theta_b");
  const double aa = std::cos(0.5 * theta_a), ba = std::sin(0.5 * theta_a);
  const double ab = std::cos(0.5 * theta_b), bb = std::sin(0.5 * theta_b);
  const double aa2 = aa * aa, ba2 = ba * ba, ab2 = ab * ab, bb2 = bb * bb;
  const double ct = std::cos(t), st = std::sin(t);

  const double quarter_c2 = aa2 * ba2 * (ab2 * ab2 + bb2 * bb2) * ct * ct +
                            ab2 * bb2 * (aa2 * aa2 + ba2 * ba2) * st * st +
                            2.0 * aa2 * ba2 * ab2 * bb2 * std::cos(2.0 * t) * std::cos(4.0 * t) -
                            aa * ba * ab * bb * (aa2 * bb2 + ba2 * ab2) * std::sin(2.0 * t) * std::sin(4.0 * t);
  return 2.0 * std::sqrt(std::max(quarter_c2, 0.0));
}

inline MeasureReport measure(const ComplexMatrix& rho) {
  MeasureReport r;
  r.wootters_lambdas = wootters_lambdas(rho);
  r.concurrence = concurrence_mixed(rho);
  r.coherence_a = l1_coherence(partial_trace(rho, Subsystem::first));
  r.coherence_b = l1_coherence(partial_trace(rho, Subsystem::second));
  r.purity = purity(rho);
  return r;
}

inline MeasureReport measure(const PureState& psi) {
  MeasureReport r = measure(psi.projector());
  r.concurrence = concurrence_pure(psi);
  return r;
}

}  // namespace mdi
