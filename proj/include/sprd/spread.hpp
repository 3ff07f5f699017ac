#ifndef SPRD_SPREAD_HPP
#define SPRD_SPREAD_HPP

#include <utility>

#include "sprd/linalg.hpp"
#include "sprd/majorization.hpp"
#include "sprd/types.hpp"

namespace sprd {

/// Spr(A) = lambda(A) + lambda(-A), non-increasing and antisymmetric;
/// plus() holds the first floor(n/2) (nonnegative) entries, Spr+(A).
class SpreadVector {
 public:
  SpreadVector() = default;
  explicit SpreadVector(RealVector full) : full_(std::move(full)) {}

  const RealVector& full() const { return full_; }
  RealVector plus() const { return full_.head(full_.size() / 2); }
  Eigen::Index dim() const { return full_.size(); }

  /// |Spr(A)| sorted descending, i.e. Spr+(A (+) A) up to one appended zero.
  RealVector abs_descending() const {
    return detail::sorted_desc(full_.cwiseAbs());
  }

 private:
  RealVector full_;
};

inline SpreadVector spread(const Hermitian& a) {
  const RealVector lam = eigenvalues(a).values();
  return SpreadVector(lam - RealVector(lam.reverse()));
}

inline SpreadVector spread_of_spectrum(const Spectrum& s) {
  return SpreadVector(s.values() - RealVector(s.values().reverse()));
}

/// Ky Fan style max characterization: sum_{i<=r} Spr_i(A) is the maximum of
/// sum <A x_i, x_i> - <A y_i, y_i> over pairs of orthonormal systems; the
/// top-r / bottom-r eigenvectors attain it.
struct SpreadWitness {
  double value = 0.0;
  Matrix xs;  // n x r, orthonormal columns
  Matrix ys;  // n x r, orthonormal columns
};

inline SpreadWitness spread_kyfan_witness(const Hermitian& a, Eigen::Index r) {
  const Eigen::Index n = a.dim();
  if (r < 1 || r > n / 2)
    throw invalid_input("spread_kyfan_witness: r out of range");
  Eigensystem es = eig_hermitian(a);
  SpreadWitness w;
  w.xs = es.basis.leftCols(r);
  w.ys = es.basis.rightCols(r).rowwise().reverse();
  for (Eigen::Index i = 0; i < r; ++i)
    w.value += es.spectrum[i] - es.spectrum[n - 1 - i];
  return w;
}

/// Rayleigh-sum difference sum <A x_i,x_i> - <A y_i,y_i> for two ONS.
inline double rayleigh_gap(const Hermitian& a, const Matrix& xs, const Matrix& ys) {
  return ((xs.adjoint() * a.mat() * xs).trace() -
          (ys.adjoint() * a.mat() * ys).trace())
      .real();
}

/// s(A - lambda_{k+1} I) majorized by Spr+(A) (zero-padded), k = floor(n/2).
inline MajorizationReport centered_singular_check(const Hermitian& a) {
  const Eigen::Index n = a.dim();
  if (n < 2) throw invalid_input("centered_singular_check: n >= 2 required");
  const Spectrum lam = eigenvalues(a);
  const Eigen::Index k = n / 2;
  const double center = lam[k];  // lambda_{k+1}, 1-based
  const RealVector s = svd_values(a.shifted(center).mat()).values();
  return majorizes(s, spread_of_spectrum(lam).plus());
}

struct HalfSpreadChain {
  MajorizationReport half_vs_s;          // 1/2 Spr+(A(+)A) <_w s(A)
  MajorizationReport chain_center_k;     // 1/2 Spr+(A(+)A) < s(A - lambda_k I)
  MajorizationReport chain_center_k1;    // same with center lambda_{k+1}
  MajorizationReport chain_upper_k;      // s(A - lambda_k I) < Spr+(A)
  MajorizationReport chain_upper_k1;     // s(A - lambda_{k+1} I) < Spr+(A)
};

/// 1/2 Spr+(A(+)A) <_w s(A), plus the centered chain evaluated at both the
/// lambda_k and lambda_{k+1} centers (the two appear interchangeably in the
/// underlying identities; both are reported).
inline HalfSpreadChain half_spread_vs_singular_check(const Hermitian& a) {
  const Spectrum lam = eigenvalues(a);
  const SpreadVector spr = spread_of_spectrum(lam);
  const RealVector half = 0.5 * spr.abs_descending();
  const RealVector s = svd_values(a.mat()).values();

  HalfSpreadChain out;
  out.half_vs_s = submajorizes(half, s);
  if (a.dim() >= 2) {
    const Eigen::Index k = a.dim() / 2;
    for (int which = 0; which < 2; ++which) {
      const double center = which == 0 ? lam[k - 1] : lam[k];
      const RealVector sc = svd_values(a.shifted(center).mat()).values();
      auto lower = majorizes(half, sc);
      auto upper = majorizes(sc, spr.plus());
      if (which == 0) {
        out.chain_center_k = lower;
        out.chain_upper_k = upper;
      } else {
        out.chain_center_k1 = lower;
        out.chain_upper_k1 = upper;
      }
    }
  }
  return out;
}

struct CompressionResult {
  MajorizationReport submaj;   // Spr+(Z*AZ) <_w Spr+(A)
  bool entrywise = false;      // Spr+_i(Z*AZ) <= Spr+_i(A), i <= floor(r/2)
  Eigen::Index first_entrywise_failure = -1;
};

/// Interlacing consequences for a compression Z*AZ with Z an n x r isometry.
inline CompressionResult compression_check(const Hermitian& a, const Matrix& z) {
  if (z.rows() != a.dim())
    throw invalid_input("compression_check: ambient dimension mismatch");
  const Eigen::Index r = z.cols();
  const double ortho =
      (z.adjoint() * z - Matrix::Identity(r, r)).cwiseAbs().maxCoeff();
  if (ortho > 1e-10)
    throw invalid_input("compression_check: Z is not an isometry");

  const RealVector inner = spread(a.conjugated_by(z)).plus();
  const RealVector outer = spread(a).plus();
  CompressionResult out;
  out.submaj = submajorizes(inner, outer,
                            1e-9 * a.spectral_scale());
  out.entrywise = true;
  const double tol = 1e-9 * a.spectral_scale();
  for (Eigen::Index i = 0; i < r / 2; ++i) {
    if (inner[i] > outer[i] + tol) {
      out.entrywise = false;
      out.first_entrywise_failure = i;
      break;
    }
  }
  return out;
}

struct OrbitDiameter {
  double value = 0.0;
  Matrix witness;  // unitary attaining N(A - U*AU) = N(D_Spr(A))
};

/// Diameter of the unitary orbit of A in the norm N: value = N(D_Spr(A)),
/// attained by conjugating with the eigenbasis composed with the
/// order-reversing permutation.
inline OrbitDiameter orbit_diameter(const Hermitian& a, const UinDescriptor& n) {
  Eigensystem es = eig_hermitian(a);
  OrbitDiameter out;
  out.value = uin_norm(spread_of_spectrum(es.spectrum).full(), n);
  out.witness = es.basis * Matrix(es.basis.rowwise().reverse()).adjoint();
  return out;
}

struct LidskiiSpreadResult {
  MajorizationReport lower;  // Spr(A) - Spr(B) < Spr(A-B)
  MajorizationReport upper;  // Spr(A-B) < Spr(A) + Spr(B)
};

inline LidskiiSpreadResult lidskii_spread_check(const Hermitian& a,
                                                const Hermitian& b) {
  if (a.dim() != b.dim())
    throw invalid_input("lidskii_spread_check: dimension mismatch");
  const RealVector sa = spread(a).full();
  const RealVector sb = spread(b).full();
  const RealVector sd = spread(a - b).full();
  LidskiiSpreadResult out;
  out.lower = majorizes(sa - sb, sd);
  out.upper = majorizes(sd, sa + sb);
  return out;
}

}  // namespace sprd

#endif  // SPRD_SPREAD_HPP
