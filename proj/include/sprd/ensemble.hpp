#ifndef SPRD_ENSEMBLE_HPP
#define SPRD_ENSEMBLE_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "sprd/linalg.hpp"
#include "sprd/subspaces.hpp"
#include "sprd/types.hpp"

namespace sprd {

/// Counter-based stream generator: splitmix64 over a counter, keyed by
/// (seed, stream). Same (seed, stream) always yields the same sequence, so
/// per-trial streams can be drawn in any order across workers.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix(mix(seed ^ 0x9e3779b97f4a7c15ull) ^ stream)), counter_(0) {}

  std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_uniform(), u2 = next_uniform();
    while (u1 <= 0.0) u1 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Complex standard normal (E|z|^2 = 1).
  Complex next_cgaussian() {
    const double inv_sqrt2 = 0.7071067811865475244;
    return Complex(next_gaussian() * inv_sqrt2, next_gaussian() * inv_sqrt2);
  }

  /// Integer in [lo, hi] inclusive.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline Matrix gen_complex_gaussian(StreamRng& rng, Eigen::Index rows,
                                   Eigen::Index cols) {
  Matrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = rng.next_cgaussian();
  return g;
}

/// (G + G*)/2 with standard complex Gaussian entries, scaled.
inline Hermitian gen_hermitian(StreamRng& rng, Eigen::Index dim,
                               double scale = 1.0) {
  const Matrix g = gen_complex_gaussian(rng, dim, dim);
  return Hermitian(Matrix(scale * 0.5 * (g + g.adjoint())));
}

/// G*G/dim, scaled; positive semidefinite by construction.
inline Hermitian gen_psd(StreamRng& rng, Eigen::Index dim, double scale = 1.0) {
  const Matrix g = gen_complex_gaussian(rng, dim, dim);
  return Hermitian(Matrix(scale / static_cast<double>(dim) *
                          (g.adjoint() * g)));
}

/// Haar unitary: QR of a Gaussian matrix with the R-diagonal phase fixed
/// positive, which makes the factorization unique.
inline Matrix gen_unitary(StreamRng& rng, Eigen::Index dim) {
  const Matrix g = gen_complex_gaussian(rng, dim, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= a > 0.0 ? d / a : Complex(1.0, 0.0);
  }
  return q;
}

/// First k columns of a Haar unitary.
inline Isometry gen_isometry(StreamRng& rng, Eigen::Index dim, Eigen::Index k) {
  return Isometry(Matrix(gen_unitary(rng, dim).leftCols(k)));
}

// --- fixed and structured instances -----------------------------------------

/// The 4x4 positive semidefinite block matrix whose entrywise comparison
/// 2 s_j(B) <= Spr+_j(A) fails at j = 2.
inline Hermitian fixture_tao_4x4() {
  RealMatrix a(4, 4);
  a << 2, 1, 0, 1,
       1, 2, 1, 0,
       0, 1, 3, 1,
       1, 0, 1, 3;
  return Hermitian::from_real(a);
}

/// A1 = [[3,2],[2,3]], A2 = 3I: s(A1-A2) = (2,2) but Spr+(A1 (+) A2) = (4,0).
inline std::pair<Hermitian, Hermitian> fixture_2x2_pair() {
  RealMatrix a1(2, 2);
  a1 << 3, 2, 2, 3;
  return {Hermitian::from_real(a1),
          Hermitian::from_real(RealMatrix(3.0 * RealMatrix::Identity(2, 2)))};
}

/// The 4x4 instance violating the conjectured relation
/// lambda([ (A1-A2)^2 + 4 B*B ]^{1/2}) <_w Spr+(A).
inline Hermitian fixture_sqrt_conjecture_4x4() {
  RealMatrix a(4, 4);
  a << 1, 2, 1, 2,
       2, 1, 1, 0,
       1, 1, 2, 0,
       2, 0, 0, 2;
  return Hermitian::from_real(a);
}

/// hat(B) for a random square B: the sharpness witness 2 s(B) = Spr+(hat(B)).
inline Hermitian gen_hat_witness(StreamRng& rng, Eigen::Index half_dim) {
  return hat(gen_complex_gaussian(rng, half_dim, half_dim));
}

/// (A1, -A1) with A1 PSD: s(A1 - A2) = 2 lambda(A1) = Spr+(A1 (+) A2).
inline std::pair<Hermitian, Hermitian> gen_negation_pair(StreamRng& rng,
                                                         Eigen::Index dim) {
  Hermitian a1 = gen_psd(rng, dim);
  return {a1, -a1};
}

/// aI: spread identically zero.
inline Hermitian gen_scalar(StreamRng& rng, Eigen::Index dim) {
  const double a = rng.next_gaussian();
  return Hermitian(Matrix(a * Matrix::Identity(dim, dim)));
}

/// Random unitary conjugate of a diagonal with repeated entries.
inline Hermitian gen_repeated_spectrum(StreamRng& rng, Eigen::Index dim) {
  RealVector lam(dim);
  double v = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i % 2 == 0) v = rng.next_gaussian();
    lam[i] = v;
  }
  const Matrix u = gen_unitary(rng, dim);
  return Hermitian(Matrix(u * lam.cast<Complex>().asDiagonal() * u.adjoint()));
}

}  // namespace sprd

#endif  // SPRD_ENSEMBLE_HPP
