#ifndef SPRD_LINALG_HPP
#define SPRD_LINALG_HPP

#include <sstream>

#include <Eigen/Dense>

#include "sprd/types.hpp"

namespace sprd {

/// Eigendecomposition of a Hermitian matrix, eigenvalues non-increasing,
/// basis column j holding the eigenvector for spectrum[j].
struct Eigensystem {
  Spectrum spectrum;
  Matrix basis;
};

namespace detail {

inline std::string digest(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols() << " |m|=" << m.norm();
  return os.str();
}

}  // namespace detail

inline Eigensystem eig_hermitian(const Hermitian& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat());
  if (es.info() != Eigen::Success)
    throw solver_failure("eig_hermitian: solver did not converge",
                         detail::digest(a.mat()));
  const Eigen::Index n = a.dim();
  // Eigen returns ascending order; flip to non-increasing.
  RealVector lam(n);
  Matrix v(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    lam[j] = es.eigenvalues()[n - 1 - j];
    v.col(j) = es.eigenvectors().col(n - 1 - j);
  }
  return Eigensystem{Spectrum(std::move(lam)), std::move(v)};
}

inline Spectrum eigenvalues(const Hermitian& a) {
  return eig_hermitian(a).spectrum;
}

inline SingularValues svd_values(const Matrix& b) {
  Eigen::JacobiSVD<Matrix> svd(b);
  return SingularValues(svd.singularValues());
}

/// e^{iX} for Hermitian X, computed spectrally: V diag(e^{i lambda}) V*.
inline Matrix unitary_exp(const Hermitian& x) {
  Eigensystem es = eig_hermitian(x);
  const Eigen::Index n = x.dim();
  Matrix phases = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    phases(j, j) = std::exp(Complex(0.0, es.spectrum[j]));
  return es.basis * phases * es.basis.adjoint();
}

/// Block-diagonal A1 (+) A2.
inline Hermitian direct_sum(const Hermitian& a1, const Hermitian& a2) {
  const Eigen::Index n1 = a1.dim(), n2 = a2.dim();
  Matrix m = Matrix::Zero(n1 + n2, n1 + n2);
  m.topLeftCorner(n1, n1) = a1.mat();
  m.bottomRightCorner(n2, n2) = a2.mat();
  return Hermitian(m);
}

/// [[0, E], [E*, 0]]; its spectrum is (s(E), zeros, -s(E) reversed).
inline Hermitian hat(const Matrix& e) {
  const Eigen::Index k = e.rows(), r = e.cols();
  Matrix m = Matrix::Zero(k + r, k + r);
  m.topRightCorner(k, r) = e;
  m.bottomLeftCorner(r, k) = e.adjoint();
  return Hermitian(m);
}

/// Assemble [[A1, B], [B*, A2]].
inline Hermitian assemble_blocks(const Hermitian& a1, const Hermitian& a2,
                                 const Matrix& b) {
  const Eigen::Index k = a1.dim(), r = a2.dim();
  if (b.rows() != k || b.cols() != r)
    throw invalid_input("assemble_blocks: off-diagonal block shape mismatch");
  Matrix m(k + r, k + r);
  m.topLeftCorner(k, k) = a1.mat();
  m.topRightCorner(k, r) = b;
  m.bottomLeftCorner(r, k) = b.adjoint();
  m.bottomRightCorner(r, r) = a2.mat();
  return Hermitian(m);
}

}  // namespace sprd

#endif  // SPRD_LINALG_HPP
