#ifndef SPRD_TYPES_HPP
#define SPRD_TYPES_HPP

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sprd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline double scale_of(double norm) { return std::max(1.0, norm); }

/// Thrown when an input violates a documented precondition.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a dense solver fails to converge; carries a digest of the
/// offending matrix so the instance can be reproduced.
class solver_failure : public std::runtime_error {
 public:
  explicit solver_failure(const std::string& what, const std::string& digest)
      : std::runtime_error(what + " [matrix digest: " + digest + "]") {}
};

/// Complex square matrix with the Hermitian-symmetry invariant.
/// Inputs are symmetrized (A <- (A+A*)/2) when the asymmetry is below
/// 1e-12 * max|entry|; larger asymmetry is rejected.
class Hermitian {
 public:
  Hermitian() = default;

  explicit Hermitian(const Matrix& a) {
    if (a.rows() != a.cols()) throw invalid_input("Hermitian: matrix not square");
    const double mag = a.cwiseAbs().maxCoeff();
    const double asym = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(1.0, mag) * 2.0)
      throw invalid_input("Hermitian: asymmetry " + std::to_string(asym) +
                          " exceeds tolerance");
    m_ = 0.5 * (a + a.adjoint());
  }

  static Hermitian from_real(const RealMatrix& a) {
    return Hermitian(a.cast<Complex>());
  }

  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& mat() const { return m_; }

  double spectral_scale() const {
    // Frobenius norm upper-bounds the spectral norm; plenty for tolerance scaling.
    return scale_of(m_.norm());
  }

  Hermitian shifted(double t) const {
    Hermitian h;
    h.m_ = m_ - t * Matrix::Identity(m_.rows(), m_.cols());
    return h;
  }

  friend Hermitian operator+(const Hermitian& a, const Hermitian& b) {
    if (a.dim() != b.dim()) throw invalid_input("Hermitian: dimension mismatch");
    Hermitian h;
    h.m_ = a.m_ + b.m_;
    return h;
  }
  friend Hermitian operator-(const Hermitian& a, const Hermitian& b) {
    if (a.dim() != b.dim()) throw invalid_input("Hermitian: dimension mismatch");
    Hermitian h;
    h.m_ = a.m_ - b.m_;
    return h;
  }
  friend Hermitian operator-(const Hermitian& a) {
    Hermitian h;
    h.m_ = -a.m_;
    return h;
  }
  friend Hermitian operator*(double t, const Hermitian& a) {
    Hermitian h;
    h.m_ = t * a.m_;
    return h;
  }

  /// U*AU for unitary (or isometric) U; result is Hermitian by construction.
  Hermitian conjugated_by(const Matrix& u) const {
    Hermitian h;
    Matrix c = u.adjoint() * m_ * u;
    h.m_ = 0.5 * (c + c.adjoint());
    return h;
  }

 private:
  Matrix m_;
};

/// Real vector sorted non-increasing; wraps eigenvalue lists.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(RealVector v) : v_(std::move(v)) {
    for (Eigen::Index i = 0; i + 1 < v_.size(); ++i)
      if (v_[i] < v_[i + 1]) throw invalid_input("Spectrum: not non-increasing");
  }

  static Spectrum sorted(RealVector v) {
    std::sort(v.data(), v.data() + v.size(), std::greater<double>());
    return Spectrum(std::move(v));
  }

  Eigen::Index size() const { return v_.size(); }
  double operator[](Eigen::Index i) const { return v_[i]; }
  const RealVector& values() const { return v_; }

  /// Ascending view (lambda^up).
  RealVector ascending() const { return v_.reverse(); }

 private:
  RealVector v_;
};

/// Nonnegative reals sorted non-increasing.
class SingularValues {
 public:
  SingularValues() = default;
  explicit SingularValues(RealVector v) : v_(std::move(v)) {
    for (Eigen::Index i = 0; i < v_.size(); ++i) {
      if (v_[i] < 0.0) {
        if (v_[i] < -1e-12) throw invalid_input("SingularValues: negative entry");
        v_[i] = 0.0;
      }
      if (i + 1 < v_.size() && v_[i] < v_[i + 1])
        throw invalid_input("SingularValues: not non-increasing");
    }
  }

  Eigen::Index size() const { return v_.size(); }
  double operator[](Eigen::Index i) const { return v_[i]; }
  const RealVector& values() const { return v_; }

 private:
  RealVector v_;
};

}  // namespace sprd

#endif  // SPRD_TYPES_HPP
