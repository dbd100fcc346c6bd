#pragma once

// Magnetic dipolar interaction between two spin-1/2 dipoles.
//
// Canonical normalization: for n = z and D = 1 the Hamiltonian is
//   H = (XX + YY - 2 ZZ) / 2
// with Bell-basis spectrum Psi+ -> 2, Psi- -> 0, Phi+- -> -1. A general axis
// and coupling give D/2 * [ sigma.sigma - 3 (n.sigma)(n.sigma) ].

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mdi/linalg.hpp"

namespace mdi {

namespace pauli {

inline ComplexMatrix s0() { return ComplexMatrix(2, {1.0, 0.0, 0.0, 1.0}); }
inline ComplexMatrix s1() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
inline ComplexMatrix s2() { return ComplexMatrix(2, {0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0}); }
inline ComplexMatrix s3() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

/// n.sigma for a real 3-vector.
inline ComplexMatrix dot(const std::array<double, 3>& n) {
  return n[0] * s1() + n[1] * s2() + n[2] * s3();
}

/// sigma_3 (x) sigma_0 + sigma_0 (x) sigma_3, the total excitation generator.
inline ComplexMatrix total_z() { return kron(s3(), s0()) + kron(s0(), s3()); }

}  // namespace pauli

using Vec3 = std::array<double, 3>;

inline double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (!(n > 0.0)) throw std::invalid_argument("cannot normalize a zero vector");
  return {v[0] / n, v[1] / n, v[2] / n};
}

/// Dipole orientation n (unit vector between the dipole centers) and coupling D.
class DipoleAxis {
 public:
  DipoleAxis() = default;

  DipoleAxis(const Vec3& n_hat, double coupling_d = 1.0) : n_hat_(n_hat), coupling_d_(coupling_d) {
    if (std::abs(norm(n_hat) - 1.0) > kAlgebraTol)
      throw std::invalid_argument("DipoleAxis: axis is not a unit vector (norm " +
                                  std::to_string(norm(n_hat)) + ")");
    if (!(coupling_d > 0.0) || !std::isfinite(coupling_d))
      throw std::invalid_argument("DipoleAxis: coupling D must be positive and finite");
  }

  static DipoleAxis z(double coupling_d = 1.0) { return {{0.0, 0.0, 1.0}, coupling_d}; }

  const Vec3& n_hat() const noexcept { return n_hat_; }
  double coupling_d() const noexcept { return coupling_d_; }

  bool is_z() const noexcept {
    return std::abs(n_hat_[0]) <= kAlgebraTol && std::abs(n_hat_[1]) <= kAlgebraTol && n_hat_[2] > 0.0;
  }

 private:
  Vec3 n_hat_{0.0, 0.0, 1.0};
  double coupling_d_ = 1.0;
};

/// Rotation by `angle` radians about `axis`, realized as V = exp(-i angle/2 axis.sigma).
struct LocalRotation {
  Vec3 axis{0.0, 0.0, 1.0};
  double angle = 0.0;

  LocalRotation() = default;
  LocalRotation(const Vec3& ax, double ang) : axis(ax), angle(ang) {
    if (std::abs(norm(ax) - 1.0) > kAlgebraTol)
      throw std::invalid_argument("LocalRotation: axis is not a unit vector");
  }

  /// The SO(3) image acting on Bloch vectors (Rodrigues formula).
  Vec3 rotate(const Vec3& v) const {
    const double c = std::cos(angle), s = std::sin(angle);
    const Vec3& k = axis;
    const Vec3 kxv{k[1] * v[2] - k[2] * v[1], k[2] * v[0] - k[0] * v[2], k[0] * v[1] - k[1] * v[0]};
    const double kdv = k[0] * v[0] + k[1] * v[1] + k[2] * v[2];
    Vec3 out{};
    for (int i = 0; i < 3; ++i) out[i] = v[i] * c + kxv[i] * s + k[i] * kdv * (1.0 - c);
    return out;
  }
};

inline ComplexMatrix su2_matrix(const LocalRotation& v) {
  const double half = 0.5 * v.angle;
  const cplx minus_i_sin{0.0, -std::sin(half)};
  return std::cos(half) * pauli::s0() + minus_i_sin * pauli::dot(v.axis);
}

/// R_z(delta) = exp(-i delta sigma_3 / 2)
inline ComplexMatrix rz(double delta) { return su2_matrix(LocalRotation({0.0, 0.0, 1.0}, delta)); }

inline ComplexMatrix build_hamiltonian(const DipoleAxis& axis) {
  const ComplexMatrix heisenberg =
      kron(pauli::s1(), pauli::s1()) + kron(pauli::s2(), pauli::s2()) + kron(pauli::s3(), pauli::s3());
  const ComplexMatrix ns = pauli::dot(axis.n_hat());
  ComplexMatrix h = heisenberg - 3.0 * kron(ns, ns);
  return h * cplx{0.5 * axis.coupling_d(), 0.0};
}

/// (V (x) V) h (V (x) V)^dagger
inline ComplexMatrix conjugate_hamiltonian(const ComplexMatrix& h, const LocalRotation& v) {
  if (h.dim() != 4) throw std::invalid_argument("conjugate_hamiltonian: operator must be 4x4");
  const ComplexMatrix vv = kron(su2_matrix(v), su2_matrix(v));
  return vv * h * adjoint(vv);
}

/// Z^{-1} exp(-beta h). Eigenvalues are shifted by their minimum so the largest
/// Boltzmann weight is exactly 1 and nothing overflows at large beta.
inline ComplexMatrix gibbs_state(const ComplexMatrix& h, double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("gibbs_state: beta must be finite and non-negative");
  const EigenSystem es = hermitian_eig(h);
  const double ground = es.eigenvalues[0];
  double z = 0.0;
  for (double e : es.values()) z += std::exp(-beta * (e - ground));
  ComplexMatrix rho = spectral_apply(es, [&](double e) { return cplx{std::exp(-beta * (e - ground)) / z, 0.0}; });
  // Exact Hermitian symmetry for downstream validity checks.
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < rho.dim(); ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return rho;
}

}  // namespace mdi
