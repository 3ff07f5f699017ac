#ifndef SPRD_SUBSPACES_HPP
#define SPRD_SUBSPACES_HPP

#include <cmath>

#include "sprd/linalg.hpp"
#include "sprd/majorization.hpp"
#include "sprd/spread.hpp"
#include "sprd/types.hpp"

namespace sprd {

/// n x k matrix with orthonormal columns.
class Isometry {
 public:
  Isometry() = default;
  explicit Isometry(Matrix cols) : m_(std::move(cols)) {
    const Eigen::Index k = m_.cols();
    const double err =
        (m_.adjoint() * m_ - Matrix::Identity(k, k)).cwiseAbs().maxCoeff();
    if (err > 1e-10)
      throw invalid_input("Isometry: columns not orthonormal (error " +
                          std::to_string(err) + ")");
  }

  /// Orthonormalizes a spanning set (thin QR). Columns must be independent.
  static Isometry orthonormalized(const Matrix& span) {
    Eigen::HouseholderQR<Matrix> qr(span);
    Matrix q = qr.householderQ() * Matrix::Identity(span.rows(), span.cols());
    return Isometry(std::move(q));
  }

  Eigen::Index ambient_dim() const { return m_.rows(); }
  Eigen::Index subspace_dim() const { return m_.cols(); }
  const Matrix& cols() const { return m_; }

  /// An isometry onto the orthogonal complement of the range.
  Isometry complement() const {
    const Eigen::Index n = m_.rows(), k = m_.cols();
    // Full QR of the basis; trailing columns span the complement.
    Eigen::HouseholderQR<Matrix> qr(m_);
    Matrix q = qr.householderQ();
    Isometry out;
    out.m_ = q.rightCols(n - k);
    return out;
  }

 private:
  Matrix m_;
};

/// Angles in [0, pi/2], sorted non-increasing.
struct PrincipalAngles {
  RealVector angles;

  RealVector sines() const { return angles.array().sin(); }
};

/// cos(theta_j) = s_{k-j+1}(S*T), clamped to [0,1] against rounding.
inline PrincipalAngles principal_angles(const Isometry& s, const Isometry& t) {
  if (s.ambient_dim() != t.ambient_dim() ||
      s.subspace_dim() != t.subspace_dim())
    throw invalid_input("principal_angles: dimension mismatch");
  const Eigen::Index k = s.subspace_dim();
  const SingularValues sv = svd_values(s.cols().adjoint() * t.cols());
  PrincipalAngles out;
  out.angles.resize(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const double c = std::clamp(sv[k - 1 - j], 0.0, 1.0);
    out.angles[j] = std::acos(c);
  }
  return out;
}

/// sin(theta_j) = s_j(T* S_perp); cross-check form of the same angles.
inline PrincipalAngles principal_angles_sin_form(const Isometry& s,
                                                 const Isometry& t) {
  const SingularValues sv =
      svd_values(t.cols().adjoint() * s.complement().cols());
  PrincipalAngles out;
  out.angles.resize(s.subspace_dim());
  for (Eigen::Index j = 0; j < out.angles.size(); ++j) {
    const double v = j < sv.size() ? sv[j] : 0.0;  // k > n-k: trailing angles 0
    out.angles[j] = std::asin(std::clamp(v, 0.0, 1.0));
  }
  return out;
}

/// Davis-Kahan direct rotation from range(S) onto range(T): U = e^{iZ} with
/// lambda(Z) = (Theta*, zeros, -Theta* reversed), Theta* the positive
/// principal angles.
struct DirectRotation {
  Matrix u;
  Hermitian z;
  RealVector positive_angles;
};

inline DirectRotation direct_rotation(const Isometry& s, const Isometry& t) {
  if (s.ambient_dim() != t.ambient_dim() ||
      s.subspace_dim() != t.subspace_dim())
    throw invalid_input("direct_rotation: dimension mismatch");
  const Eigen::Index n = s.ambient_dim(), k = s.subspace_dim();

  // Align the bases through the SVD of S*T: paired principal vectors
  // x_j = S u_j in S and t_j = T v_j in T with <x_j, t_j> = sigma_j >= 0.
  Eigen::JacobiSVD<Matrix> svd(s.cols().adjoint() * t.cols(),
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector sigma = svd.singularValues();

  Matrix z = Matrix::Zero(n, n);
  std::vector<double> pos;
  for (Eigen::Index j = 0; j < k; ++j) {
    const double c = std::clamp(sigma[j], 0.0, 1.0);
    const double theta = std::acos(c);
    if (c < 1e-8)
      throw invalid_input(
          "direct_rotation: principal angle at pi/2, construction degenerates");
    // acos near sigma = 1 turns eps-level rounding into ~1e-8 angles; treat
    // anything below that floor as an exactly aligned direction.
    if (theta < 1e-7) continue;
    const Matrix x = s.cols() * svd.matrixU().col(j);
    const Matrix tj = t.cols() * svd.matrixV().col(j);
    // Unit vector of T's component orthogonal to S, in the (x_j, t_j) plane.
    const Matrix y = (tj - c * x) / std::sqrt(1.0 - c * c);
    // Plane rotation generator: Hermitian, eigenvalues +-theta on the plane.
    z += theta * Complex(0.0, -1.0) * (y * x.adjoint() - x * y.adjoint());
    pos.push_back(theta);
  }
  std::sort(pos.begin(), pos.end(), std::greater<double>());

  DirectRotation out;
  out.z = Hermitian(z);
  out.u = unitary_exp(out.z);
  out.positive_angles = Eigen::Map<RealVector>(pos.data(), pos.size());
  return out;
}

/// With T = range(e^{iX} S): Theta(S,T) <_w 1/2 Spr+(X).
inline MajorizationReport angle_spread_check(const Isometry& s,
                                             const Hermitian& x) {
  if (s.ambient_dim() != x.dim())
    throw invalid_input("angle_spread_check: ambient dimension mismatch");
  const Isometry t{Matrix(unitary_exp(x) * s.cols())};
  const PrincipalAngles theta = principal_angles(s, t);
  return submajorizes(theta.angles, 0.5 * spread(x).plus(),
                      1e-9 * x.spectral_scale());
}

struct RotationBoundResult {
  MajorizationReport z_vs_half_spread;   // s(Z) <_w 1/2 |Spr(X)|
  MajorizationReport half_spread_vs_sx;  // 1/2 |Spr(X)| <_w s(X)
  DirectRotation rotation;
};

/// s(Z) <_w 1/2 |Spr(X)|down <_w s(X), Z the direct-rotation logarithm for
/// the pair (S, e^{iX} S).
inline RotationBoundResult rotation_bound_check(const Isometry& s,
                                                const Hermitian& x) {
  if (s.ambient_dim() != x.dim())
    throw invalid_input("rotation_bound_check: ambient dimension mismatch");
  const Isometry t{Matrix(unitary_exp(x) * s.cols())};
  RotationBoundResult out;
  out.rotation = direct_rotation(s, t);
  const RealVector half = 0.5 * spread(x).abs_descending();
  const double tol = 1e-9 * scale_of(x.spectral_scale());
  out.z_vs_half_spread =
      submajorizes(svd_values(out.rotation.z.mat()).values(), half, tol);
  out.half_spread_vs_sx = submajorizes(half, svd_values(x.mat()).values(), tol);
  return out;
}

}  // namespace sprd

#endif  // SPRD_SUBSPACES_HPP
