#pragma once

// Dense complex linear algebra for two-qubit problems.
//
// Everything here works on 2x2 and 4x4 matrices only. Storage is a fixed
// 16-slot row-major array, so matrices are cheap values that can be copied
// freely between sweep workers. Basis order for 4x4 objects is
// |00>, |01>, |10>, |11>, with the first tensor factor being dipole a.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace mdi {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Tolerance ladder shared by every module.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kEigenTol = 1e-10;

/// Raised when an iterative routine fails to converge or produces values
/// that violate a mathematical guarantee by more than rounding noise.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_dim(std::size_t dim) {
  if (dim != 2 && dim != 4)
    throw std::invalid_argument("dimension must be 2 or 4, got " + std::to_string(dim));
}

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace detail

class ComplexMatrix {
 public:
  ComplexMatrix() : ComplexMatrix(2) {}

  explicit ComplexMatrix(std::size_t dim) : dim_(dim) {
    detail::check_dim(dim);
    data_.fill(cplx{0.0, 0.0});
  }

  /// Row-major initializer; entry count must be dim*dim.
  ComplexMatrix(std::size_t dim, std::initializer_list<cplx> entries) : ComplexMatrix(dim) {
    if (entries.size() != dim * dim)
      throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(dim * dim) +
                                  " entries, got " + std::to_string(entries.size()));
    std::copy(entries.begin(), entries.end(), data_.begin());
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ * dim_; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * dim_ + c]; }

  std::span<const cplx> entries() const noexcept { return {data_.data(), size()}; }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    detail::require_same_dim(dim_, o.dim_, "add");
    for (std::size_t k = 0; k < size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    detail::require_same_dim(dim_, o.dim_, "subtract");
    for (std::size_t k = 0; k < size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  ComplexMatrix& operator*=(cplx s) noexcept {
    for (std::size_t k = 0; k < size(); ++k) data_[k] *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= cplx{s, 0.0}; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    detail::require_same_dim(a.dim_, b.dim_, "matmul");
    ComplexMatrix out(a.dim_);
    const std::size_t n = a.dim_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const cplx aik = a(i, k);
        for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.dim_ == b.dim_ && std::equal(a.data_.begin(), a.data_.begin() + a.size(), b.data_.begin());
  }

 private:
  std::size_t dim_;
  std::array<cplx, 16> data_{};
};

/// Normalized amplitude vector of dimension 2 or 4.
class PureState {
 public:
  PureState() : PureState(std::array<cplx, 2>{cplx{1.0, 0.0}, cplx{0.0, 0.0}}) {}

  template <std::size_t N>
  explicit PureState(const std::array<cplx, N>& amps) : PureState(std::span<const cplx>(amps)) {}

  explicit PureState(std::span<const cplx> amps) : dim_(amps.size()) {
    detail::check_dim(dim_);
    std::copy(amps.begin(), amps.end(), amps_.begin());
    const double n2 = norm_squared();
    if (std::abs(n2 - 1.0) > kAlgebraTol)
      throw std::invalid_argument("PureState: amplitudes not normalized (norm^2 = " +
                                  std::to_string(n2) + ")");
  }

  PureState(std::initializer_list<cplx> amps)
      : PureState(std::span<const cplx>(amps.begin(), amps.size())) {}

  /// Builds a state from arbitrary nonzero amplitudes by rescaling them.
  static PureState normalized(std::span<const cplx> amps) {
    double n2 = 0.0;
    for (const auto& a : amps) n2 += std::norm(a);
    if (!(n2 > 0.0)) throw std::invalid_argument("PureState: zero vector cannot be normalized");
    std::array<cplx, 4> tmp{};
    const double inv = 1.0 / std::sqrt(n2);
    for (std::size_t i = 0; i < amps.size(); ++i) tmp[i] = amps[i] * inv;
    return PureState(std::span<const cplx>(tmp.data(), amps.size()));
  }

  std::size_t dim() const noexcept { return dim_; }
  const cplx& operator[](std::size_t i) const noexcept { return amps_[i]; }
  std::span<const cplx> amplitudes() const noexcept { return {amps_.data(), dim_}; }

  double norm_squared() const noexcept {
    double n2 = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) n2 += std::norm(amps_[i]);
    return n2;
  }

  /// |psi><psi|
  ComplexMatrix projector() const {
    ComplexMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) = amps_[i] * std::conj(amps_[j]);
    return m;
  }

 private:
  std::size_t dim_;
  std::array<cplx, 4> amps_{};
};

struct EigenSystem {
  std::array<double, 4> eigenvalues{};  // ascending, first dim() entries used
  ComplexMatrix eigenvectors;           // column k pairs with eigenvalues[k]

  std::size_t dim() const noexcept { return eigenvectors.dim(); }
  std::span<const double> values() const noexcept { return {eigenvalues.data(), dim()}; }
};

enum class Subsystem { first, second };

// ---------------------------------------------------------------------------
// Elementary algebra

inline ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

inline ComplexMatrix conjugate(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = std::conj(m(i, j));
  return out;
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b; }
inline ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) { return a + b; }
inline ComplexMatrix scale(const ComplexMatrix& a, cplx s) { return a * s; }

inline cplx trace(const ComplexMatrix& m) {
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

inline double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

inline double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_dim(a.dim(), b.dim(), "frobenius_distance");
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::norm(a.entries()[k] - b.entries()[k]);
  return std::sqrt(s);
}

inline double max_abs_entry(const ComplexMatrix& m) {
  double best = 0.0;
  for (const auto& z : m.entries()) best = std::max(best, std::abs(z));
  return best;
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

inline bool is_hermitian(const ComplexMatrix& m, double tol = kAlgebraTol) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

inline bool is_unitary(const ComplexMatrix& u, double tol = kEigenTol) {
  return max_abs_entry(u * adjoint(u) - ComplexMatrix::identity(u.dim())) <= tol;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2)
    throw std::invalid_argument("kron: both factors must be 2x2");
  ComplexMatrix out(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

inline PureState kron(const PureState& a, const PureState& b) {
  if (a.dim() != 2 || b.dim() != 2)
    throw std::invalid_argument("kron: both factors must be single-qubit states");
  std::array<cplx, 4> amps{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) amps[2 * i + k] = a[i] * b[k];
  return PureState::normalized(amps);
}

/// m * psi. The caller guarantees m preserves the norm (unitary or projector
/// onto psi's subspace); the result is renormalized to absorb rounding.
inline PureState apply(const ComplexMatrix& m, const PureState& psi) {
  detail::require_same_dim(m.dim(), psi.dim(), "apply");
  std::array<cplx, 4> out{};
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * psi[j];
  return PureState::normalized(std::span<const cplx>(out.data(), m.dim()));
}

inline cplx inner(const PureState& a, const PureState& b) {
  detail::require_same_dim(a.dim(), b.dim(), "inner");
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// min over phi of || e^{i phi} a - b ||.
inline double phase_insensitive_distance(const PureState& a, const PureState& b) {
  // Align the global phase of b to a, then take the plain distance; this
  // avoids the cancellation in |a|^2 + |b|^2 - 2|<a,b>|.
  detail::require_same_dim(a.dim(), b.dim(), "phase_insensitive_distance");
  const cplx z = inner(a, b);
  const double mag = std::abs(z);
  const cplx phase = mag > 0.0 ? std::conj(z) / mag : cplx{1.0, 0.0};
  double d2 = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) d2 += std::norm(a[i] - phase * b[i]);
  return std::sqrt(d2);
}

inline cplx expectation(const ComplexMatrix& op, const PureState& psi) {
  detail::require_same_dim(op.dim(), psi.dim(), "expectation");
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < op.dim(); ++i)
    for (std::size_t j = 0; j < op.dim(); ++j) s += std::conj(psi[i]) * op(i, j) * psi[j];
  return s;
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition by cyclic complex Jacobi rotations

inline EigenSystem hermitian_eig(const ComplexMatrix& m) {
  if (!is_hermitian(m, kEigenTol))
    throw std::invalid_argument("hermitian_eig: input is not Hermitian");

  const std::size_t n = m.dim();
  // Symmetrize so rounding noise below the tolerance does not bias the result.
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(frobenius_norm(a), 1e-300);
  constexpr int kMaxSweeps = 64;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-17 * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        // Phase e^{-i phi} on column q makes a(p,q) real, then a real Givens
        // rotation annihilates it.
        const cplx phase = std::conj(a(p, q)) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Columns: a <- a J with J = [[c, s], [-s e, c e]], e = phase.
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q) * phase;
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q) * phase;
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
        // Rows: a <- J^dagger a
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k) * std::conj(phase);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged) throw NumericError("hermitian_eig: Jacobi iteration did not converge");

  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.begin() + n,
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenSystem es;
  es.eigenvectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    es.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) es.eigenvectors(r, k) = v(r, order[k]);
  }
  return es;
}

/// V diag(f(lambda)) V^dagger for a Hermitian input.
template <typename Fn>
ComplexMatrix spectral_apply(const EigenSystem& es, Fn&& fn) {
  const std::size_t n = es.dim();
  const ComplexMatrix& v = es.eigenvectors;
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx fk = fn(es.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = v(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(v(j, k));
    }
  }
  return out;
}

/// exp(-i * scale * m) for Hermitian m.
inline ComplexMatrix expm_i(const ComplexMatrix& m, double scale) {
  const EigenSystem es = hermitian_eig(m);
  return spectral_apply(es, [scale](double lambda) { return std::polar(1.0, -scale * lambda); });
}

/// Square root of a positive semidefinite matrix; eigenvalues in
/// [-clamp, 0) are treated as zero.
inline ComplexMatrix psd_sqrt(const ComplexMatrix& m, double clamp = 1e-9) {
  const EigenSystem es = hermitian_eig(m);
  if (es.eigenvalues[0] < -clamp)
    throw NumericError("psd_sqrt: matrix has a negative eigenvalue " + std::to_string(es.eigenvalues[0]));
  return spectral_apply(es, [](double lambda) { return cplx{std::sqrt(std::max(lambda, 0.0)), 0.0}; });
}

// ---------------------------------------------------------------------------
// Singular values by one-sided (Hestenes) Jacobi orthogonalization.
//
// Singular values come out as column norms, so small ones keep absolute
// accuracy of order eps * ||m|| instead of the sqrt(eps) that squaring and
// taking eigenvalues of m^dagger m would give.

inline std::array<double, 4> singular_values(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  constexpr int kMaxSweeps = 64;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double alpha = 0.0, beta = 0.0;
        cplx gamma{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
          alpha += std::norm(a(k, i));
          beta += std::norm(a(k, j));
          gamma += std::conj(a(k, i)) * a(k, j);
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= 1e-15 * std::sqrt(alpha * beta)) continue;
        converged = false;
        const cplx phase = std::conj(gamma) / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx ai = a(k, i);
          const cplx aj = a(k, j) * phase;
          a(k, i) = c * ai - s * aj;
          a(k, j) = s * ai + c * aj;
        }
      }
    }
  }
  if (!converged) throw NumericError("singular_values: one-sided Jacobi did not converge");

  std::array<double, 4> sv{};
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += std::norm(a(k, j));
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.begin() + n, std::greater<>());
  return sv;
}

// ---------------------------------------------------------------------------
// Partial trace over one qubit of a two-qubit operator

inline ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep) {
  if (rho.dim() != 4) throw std::invalid_argument("partial_trace: operator must be 4x4");
  ComplexMatrix out(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        switch (keep) {
          case Subsystem::first:
            out(i, j) += rho(2 * i + k, 2 * j + k);
            break;
          case Subsystem::second:
            out(i, j) += rho(2 * k + i, 2 * k + j);
            break;
          default:
            throw std::invalid_argument("partial_trace: unknown subsystem label");
        }
      }
  return out;
}

inline Subsystem parse_subsystem(std::string_view label) {
  if (label == "first" || label == "a") return Subsystem::first;
  if (label == "second" || label == "b") return Subsystem::second;
  throw std::invalid_argument("unknown subsystem label '" + std::string(label) + "'");
}

}  // namespace mdi
