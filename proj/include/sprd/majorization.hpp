#ifndef SPRD_MAJORIZATION_HPP
#define SPRD_MAJORIZATION_HPP

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sprd/linalg.hpp"
#include "sprd/types.hpp"

namespace sprd {

enum class Relation { submajorized, majorized };

/// Outcome of a (sub)majorization comparison x ?< y.
/// margins[j] = sum_{i<=j} y_i^down - sum_{i<=j} x_i^down on the padded,
/// descending-sorted vectors. Submajorization holds iff min(margins) >= -tol;
/// majorization additionally needs |trace_gap| <= tol.
struct MajorizationReport {
  Relation relation = Relation::submajorized;
  bool verdict = false;
  RealVector margins;
  double trace_gap = 0.0;
  double tolerance = 0.0;
  Eigen::Index padded_length = 0;

  double min_margin() const {
    return margins.size() == 0 ? 0.0 : margins.minCoeff();
  }
};

inline double default_tolerance(const RealVector& y) {
  return 1e-9 * std::max(1.0, y.cwiseAbs().sum());
}

namespace detail {

inline RealVector sorted_desc(RealVector v) {
  std::sort(v.data(), v.data() + v.size(), std::greater<double>());
  return v;
}

inline RealVector zero_pad(const RealVector& v, Eigen::Index n) {
  RealVector out = RealVector::Zero(n);
  out.head(v.size()) = v;
  return out;
}

// Pads the shorter of x, y with zeros. Defined only for nonnegative vectors;
// signed unequal-length comparison is rejected.
inline void pad_for_comparison(RealVector& x, RealVector& y) {
  if (x.size() == y.size()) return;
  if ((x.size() > 0 && x.minCoeff() < 0.0) || (y.size() > 0 && y.minCoeff() < 0.0))
    throw invalid_input(
        "submajorizes: unequal lengths require nonnegative entries");
  const Eigen::Index n = std::max(x.size(), y.size());
  x = zero_pad(x, n);
  y = zero_pad(y, n);
}

}  // namespace detail

inline MajorizationReport submajorizes(const RealVector& x, const RealVector& y,
                                       double tol) {
  RealVector xs = x, ys = y;
  detail::pad_for_comparison(xs, ys);
  xs = detail::sorted_desc(std::move(xs));
  ys = detail::sorted_desc(std::move(ys));

  MajorizationReport rep;
  rep.relation = Relation::submajorized;
  rep.tolerance = tol;
  rep.padded_length = xs.size();
  rep.margins.resize(xs.size());
  double px = 0.0, py = 0.0;
  for (Eigen::Index j = 0; j < xs.size(); ++j) {
    px += xs[j];
    py += ys[j];
    rep.margins[j] = py - px;
  }
  rep.trace_gap = py - px;
  rep.verdict = rep.min_margin() >= -tol;
  return rep;
}

inline MajorizationReport submajorizes(const RealVector& x, const RealVector& y) {
  return submajorizes(x, y, default_tolerance(y));
}

inline MajorizationReport majorizes(const RealVector& x, const RealVector& y,
                                    double tol) {
  MajorizationReport rep = submajorizes(x, y, tol);
  rep.relation = Relation::majorized;
  rep.verdict = rep.verdict && std::abs(rep.trace_gap) <= tol;
  return rep;
}

inline MajorizationReport majorizes(const RealVector& x, const RealVector& y) {
  return majorizes(x, y, default_tolerance(y));
}

/// Symmetric-gauge norms of the diagonal matrix D_x.
struct UinDescriptor {
  enum class Kind { ky_fan, schatten, spectral };
  Kind kind = Kind::spectral;
  int k = 1;        // ky_fan
  double p = 2.0;   // schatten

  static UinDescriptor ky_fan(int k) {
    if (k < 1) throw invalid_input("ky_fan: k must be >= 1");
    return UinDescriptor{Kind::ky_fan, k, 0.0};
  }
  static UinDescriptor schatten(double p) {
    if (p < 1.0) throw invalid_input("schatten: p must be >= 1");
    return UinDescriptor{Kind::schatten, 0, p};
  }
  static UinDescriptor spectral() { return UinDescriptor{}; }

  std::string name() const {
    switch (kind) {
      case Kind::ky_fan:
        return "ky_fan_" + std::to_string(k);
      case Kind::schatten: {
        std::ostringstream os;
        os << "schatten_" << p;
        return os.str();
      }
      default:
        return "spectral";
    }
  }
};

inline double uin_norm(const RealVector& x, const UinDescriptor& n) {
  if (x.size() == 0) return 0.0;
  RealVector a = detail::sorted_desc(x.cwiseAbs());
  switch (n.kind) {
    case UinDescriptor::Kind::ky_fan:
      return a.head(std::min<Eigen::Index>(n.k, a.size())).sum();
    case UinDescriptor::Kind::schatten: {
      double s = 0.0;
      for (Eigen::Index i = 0; i < a.size(); ++i) s += std::pow(a[i], n.p);
      return std::pow(s, 1.0 / n.p);
    }
    default:
      return a[0];
  }
}

/// uin_norm applied to singular values of a matrix.
inline double uin_norm(const Matrix& m, const UinDescriptor& n) {
  return uin_norm(svd_values(m).values(), n);
}

/// Pinching: block-diagonal compression of d along contiguous blocks of the
/// given sizes (a system of coordinate projections).
inline Hermitian pinch(const Hermitian& d, const std::vector<Eigen::Index>& blocks) {
  Eigen::Index total = 0;
  for (auto b : blocks) total += b;
  if (total != d.dim()) throw invalid_input("pinch: block sizes do not sum to dim");
  Matrix m = Matrix::Zero(d.dim(), d.dim());
  Eigen::Index off = 0;
  for (auto b : blocks) {
    m.block(off, off, b, b) = d.mat().block(off, off, b, b);
    off += b;
  }
  return Hermitian(m);
}

/// The classical Weyl/Lidskii-type inequalities as reusable checks; every
/// verdict is expected true. Hermitian inputs required for the
/// eigenvalue-based entries.
inline std::map<std::string, MajorizationReport> classical_checks(
    const Hermitian& c, const Hermitian& d,
    const std::vector<Eigen::Index>& pinch_blocks = {}) {
  if (c.dim() != d.dim())
    throw invalid_input("classical_checks: dimension mismatch");
  std::map<std::string, MajorizationReport> out;

  const RealVector sc = svd_values(c.mat()).values();
  const RealVector sd = svd_values(d.mat()).values();
  const RealVector lc = eigenvalues(c).values();
  const RealVector ld = eigenvalues(d).values();

  out["weyl_additive_sv"] =
      submajorizes(svd_values(c.mat() + d.mat()).values(), sc + sd);
  out["weyl_multiplicative_sv"] = submajorizes(
      svd_values(c.mat() * d.mat()).values(),
      (sc.array() * sd.array()).matrix());
  out["weyl_additive_eig"] = majorizes(eigenvalues(c + d).values(), lc + ld);
  out["lidskii_lower"] = majorizes(lc - ld, eigenvalues(c - d).values());
  out["lidskii_upper"] = majorizes(eigenvalues(c - d).values(),
                                   lc - Spectrum(ld).ascending());
  out["eig_diff_vs_sv"] =
      submajorizes((lc - ld).cwiseAbs(), svd_values(c.mat() - d.mat()).values());

  std::vector<Eigen::Index> blocks = pinch_blocks;
  if (blocks.empty() && d.dim() >= 2)
    blocks = {d.dim() / 2, d.dim() - d.dim() / 2};
  if (!blocks.empty())
    out["pinching"] = majorizes(eigenvalues(pinch(d, blocks)).values(), ld);

  return out;
}

}  // namespace sprd

#endif  // SPRD_MAJORIZATION_HPP
