#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "sprd/ensemble.hpp"
#include "sprd/subspaces.hpp"
#include "test_support.hpp"

using namespace sprd;

namespace {

// Hermitian with spectral norm at most `cap`; keeps direct rotations away
// from the pi/2 degeneracy.
Hermitian bounded_hermitian(StreamRng& rng, Eigen::Index n, double cap) {
  const Hermitian x = gen_hermitian(rng, n);
  const double norm = svd_values(x.mat())[0];
  return norm <= cap ? x : Hermitian(Matrix(x.mat() * (cap / norm)));
}

// Hermitian logarithm magnitudes of a unitary: |arg lambda_j| sorted
// descending, args taken in (-pi, pi].
RealVector unitary_log_moduli(const Matrix& w) {
  Eigen::ComplexEigenSolver<Matrix> es(w);
  RealVector out(w.rows());
  for (Eigen::Index j = 0; j < w.rows(); ++j)
    out[j] = std::abs(std::arg(es.eigenvalues()[j]));
  std::sort(out.data(), out.data() + out.size(), std::greater<double>());
  return out;
}

}  // namespace

TEST_CASE("Isometry validation and complement") {
  CHECK_THROWS_AS(Isometry(Matrix(2.0 * Matrix::Identity(3, 2))),
                  invalid_input);
  StreamRng rng(200, 0);
  const Isometry s = Isometry::orthonormalized(gen_complex_gaussian(rng, 5, 2));
  CHECK(s.ambient_dim() == 5);
  CHECK(s.subspace_dim() == 2);
  const Isometry c = s.complement();
  CHECK(c.subspace_dim() == 3);
  CHECK((s.cols().adjoint() * c.cols()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("planar principal angle") {
  const double alpha = 0.7;
  Matrix s(2, 1), t(2, 1);
  s << 1.0, 0.0;
  t << std::cos(alpha), std::sin(alpha);
  const PrincipalAngles theta = principal_angles(Isometry(s), Isometry(t));
  CHECK(theta.angles[0] == Catch::Approx(alpha));
  CHECK(theta.sines()[0] == Catch::Approx(std::sin(alpha)));
}

TEST_CASE("cosine and sine forms agree") {
  for (int trial = 0; trial < 40; ++trial) {
    StreamRng rng(201, trial);
    const Eigen::Index n = rng.next_int(3, 8);
    const Eigen::Index k = rng.next_int(1, n - 1);  // includes k > n - k
    const Isometry s = gen_isometry(rng, n, k);
    const Isometry t = gen_isometry(rng, n, k);
    const RealVector a = principal_angles(s, t).angles;
    const RealVector b = principal_angles_sin_form(s, t).angles;
    INFO("trial " << trial << " n " << n << " k " << k);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-7);
  }
}

TEST_CASE("principal angles are symmetric and unitarily invariant") {
  StreamRng rng(202, 0);
  const Isometry s = gen_isometry(rng, 6, 3);
  const Isometry t = gen_isometry(rng, 6, 3);
  const RealVector st = principal_angles(s, t).angles;
  const RealVector ts = principal_angles(t, s).angles;
  CHECK((st - ts).cwiseAbs().maxCoeff() < 1e-10);

  const Matrix u = gen_unitary(rng, 6);
  const RealVector rotated =
      principal_angles(Isometry(Matrix(u * s.cols())),
                       Isometry(Matrix(u * t.cols())))
          .angles;
  CHECK((st - rotated).cwiseAbs().maxCoeff() < 1e-9);

  CHECK_THROWS_AS(principal_angles(s, gen_isometry(rng, 6, 2)), invalid_input);
}

TEST_CASE("direct rotation maps S onto T with the right generator spectrum") {
  for (int trial = 0; trial < 30; ++trial) {
    StreamRng rng(203, trial);
    const Eigen::Index n = rng.next_int(3, 8);
    const Eigen::Index k = rng.next_int(1, n - 1);
    const Isometry s = gen_isometry(rng, n, k);
    const Hermitian x = bounded_hermitian(rng, n, 0.4 * std::numbers::pi);
    const Isometry t{Matrix(unitary_exp(x) * s.cols())};

    const DirectRotation rot = direct_rotation(s, t);
    // U carries range(S) into range(T).
    const Matrix moved = rot.u * s.cols();
    const Matrix proj_out =
        moved - t.cols() * (t.cols().adjoint() * moved);
    INFO("trial " << trial << " n " << n << " k " << k);
    CHECK(proj_out.cwiseAbs().maxCoeff() < 1e-8);

    // lambda(Z) = (Theta*, 0, ..., 0, -Theta* reversed).
    const RealVector lam = eigenvalues(rot.z).values();
    const Eigen::Index m = rot.positive_angles.size();
    for (Eigen::Index j = 0; j < m; ++j) {
      CHECK(lam[j] == Catch::Approx(rot.positive_angles[j]).margin(1e-8));
      CHECK(lam[n - 1 - j] ==
            Catch::Approx(-rot.positive_angles[j]).margin(1e-8));
    }
    for (Eigen::Index j = m; j < n - m; ++j)
      CHECK(std::abs(lam[j]) < 1e-9);

    // The positive angles are the nonzero principal angles.
    const RealVector theta = principal_angles(s, t).angles;
    for (Eigen::Index j = 0; j < m; ++j)
      CHECK(rot.positive_angles[j] == Catch::Approx(theta[j]).margin(1e-8));
  }
}

TEST_CASE("direct rotation rejects a pi/2 principal angle") {
  Matrix s(2, 1), t(2, 1);
  s << 1.0, 0.0;
  t << 0.0, 1.0;
  CHECK_THROWS_AS(direct_rotation(Isometry(s), Isometry(t)), invalid_input);
}

TEST_CASE("direct rotation is extremal among unitaries carrying S to T") {
  StreamRng rng(204, 0);
  const Eigen::Index n = 6, k = 2;
  const Isometry s = gen_isometry(rng, n, k);
  const Hermitian x = bounded_hermitian(rng, n, 0.4 * std::numbers::pi);
  const Isometry t{Matrix(unitary_exp(x) * s.cols())};
  const DirectRotation rot = direct_rotation(s, t);
  const RealVector sz = svd_values(rot.z.mat()).values();

  // Any other unitary W with W range(S) = range(T) factors as U times a
  // unitary preserving range(S); its log-moduli submajorize-dominate s(Z).
  const Isometry sperp = s.complement();
  for (int probe = 0; probe < 200; ++probe) {
    StreamRng prng(205, probe);
    const Matrix q1 = gen_unitary(prng, k);
    const Matrix q2 = gen_unitary(prng, n - k);
    const Matrix block = s.cols() * q1 * s.cols().adjoint() +
                         sperp.cols() * q2 * sperp.cols().adjoint();
    const Matrix w = rot.u * block;
    // Sanity: W still maps S into T.
    const Matrix moved = w * s.cols();
    REQUIRE((moved - t.cols() * (t.cols().adjoint() * moved))
                .cwiseAbs()
                .maxCoeff() < 1e-8);
    CHECK(oracle::prefix_submajorized(sz, unitary_log_moduli(w), 1e-8));
  }
}

TEST_CASE("angle spread bound across random instances") {
  for (int trial = 0; trial < 60; ++trial) {
    StreamRng rng(206, trial);
    const Eigen::Index n = rng.next_int(2, 9);
    const Eigen::Index k = rng.next_int(1, n - 1);
    const Isometry s = gen_isometry(rng, n, k);
    const Hermitian x = gen_hermitian(rng, n);  // no norm cap needed here
    const auto rep = angle_spread_check(s, x);
    INFO("trial " << trial << " n " << n << " k " << k);
    CHECK(rep.verdict);
  }
  StreamRng rng(207, 0);
  CHECK_THROWS_AS(angle_spread_check(gen_isometry(rng, 4, 2), gen_hermitian(rng, 5)),
                  invalid_input);
}

TEST_CASE("rotation bound chain across random instances") {
  for (int trial = 0; trial < 40; ++trial) {
    StreamRng rng(208, trial);
    const Eigen::Index n = rng.next_int(2, 8);
    const Eigen::Index k = rng.next_int(1, n - 1);
    const Isometry s = gen_isometry(rng, n, k);
    const Hermitian x = bounded_hermitian(rng, n, 0.45 * std::numbers::pi);
    const auto res = rotation_bound_check(s, x);
    INFO("trial " << trial << " n " << n << " k " << k);
    CHECK(res.z_vs_half_spread.verdict);
    CHECK(res.half_spread_vs_sx.verdict);
  }
}

TEST_CASE("largest principal angle obeys the triangle inequality") {
  for (int trial = 0; trial < 50; ++trial) {
    StreamRng rng(209, trial);
    const Eigen::Index n = rng.next_int(3, 7);
    const Eigen::Index k = rng.next_int(1, n - 1);
    const Isometry s = gen_isometry(rng, n, k);
    const Isometry t = gen_isometry(rng, n, k);
    const Isometry r = gen_isometry(rng, n, k);
    const double st = principal_angles(s, t).angles[0];
    const double tr = principal_angles(t, r).angles[0];
    const double sr = principal_angles(s, r).angles[0];
    CHECK(sr <= st + tr + 1e-9);
  }
}

TEST_CASE("planar rotation attains the angle bound with equality") {
  const double theta = 0.6;
  Matrix gen(2, 2);
  gen << 0.0, Complex(0.0, theta), Complex(0.0, -theta), 0.0;
  const Hermitian x(gen);
  Matrix e1(2, 1);
  e1 << 1.0, 0.0;
  const Isometry s(e1);
  const Isometry t{Matrix(unitary_exp(x) * s.cols())};
  const PrincipalAngles pa = principal_angles(s, t);
  CHECK(pa.angles[0] == Catch::Approx(theta));
  // Theta equals 1/2 Spr+(X) exactly: margin is zero up to rounding.
  const auto rep = angle_spread_check(s, x);
  CHECK(rep.verdict);
  CHECK(std::abs(rep.min_margin()) < 1e-10);
}
