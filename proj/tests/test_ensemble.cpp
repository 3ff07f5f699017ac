#include <catch2/catch_amalgamated.hpp>

#include "sprd/ensemble.hpp"
#include "sprd/linalg.hpp"
#include "test_support.hpp"

using namespace sprd;

TEST_CASE("StreamRng is deterministic per (seed, stream)") {
  StreamRng a(12345, 7), b(12345, 7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  StreamRng c(12345, 8);
  bool differs = false;
  StreamRng a2(12345, 7);
  for (int i = 0; i < 100; ++i)
    if (a2.next_u64() != c.next_u64()) differs = true;
  CHECK(differs);

  StreamRng d(54321, 7);
  StreamRng a3(12345, 7);
  bool seed_differs = false;
  for (int i = 0; i < 100; ++i)
    if (a3.next_u64() != d.next_u64()) seed_differs = true;
  CHECK(seed_differs);
}

TEST_CASE("uniform and integer draws stay in range") {
  StreamRng rng(1, 1);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.next_uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const auto k = rng.next_int(3, 9);
    CHECK(k >= 3);
    CHECK(k <= 9);
  }
  // Every value of a small range appears.
  StreamRng rng2(2, 1);
  std::array<int, 4> seen{};
  for (int i = 0; i < 400; ++i) ++seen[rng2.next_int(0, 3)];
  for (int count : seen) CHECK(count > 0);
}

TEST_CASE("Gaussian moments look right") {
  StreamRng rng(3, 1);
  double sum = 0.0, sumsq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double g = rng.next_gaussian();
    sum += g;
    sumsq += g * g;
  }
  CHECK(std::abs(sum / n) < 0.03);
  CHECK(std::abs(sumsq / n - 1.0) < 0.05);
}

TEST_CASE("gen_hermitian is Hermitian; deterministic across calls") {
  StreamRng r1(4, 2), r2(4, 2);
  const Hermitian a = gen_hermitian(r1, 5), b = gen_hermitian(r2, 5);
  CHECK((a.mat() - b.mat()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.mat() - a.mat().adjoint()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("gen_psd produces positive semidefinite matrices") {
  for (int trial = 0; trial < 50; ++trial) {
    StreamRng rng(5, trial);
    const Eigen::Index n = rng.next_int(1, 8);
    const Spectrum lam = eigenvalues(gen_psd(rng, n));
    CHECK(lam[n - 1] >= -1e-12);
  }
}

TEST_CASE("gen_unitary is unitary with Haar-like statistics") {
  for (int trial = 0; trial < 30; ++trial) {
    StreamRng rng(6, trial);
    const Eigen::Index n = rng.next_int(1, 8);
    const Matrix u = gen_unitary(rng, n);
    CHECK((u.adjoint() * u - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <
          1e-12);
  }

  // Invariance smoke test: entries average to zero over many draws.
  Complex mean = 0.0;
  const int draws = 1000;
  for (int i = 0; i < draws; ++i) {
    StreamRng rng(7, i);
    mean += gen_unitary(rng, 3)(0, 0);
  }
  CHECK(std::abs(mean) / draws < 0.1);
}

TEST_CASE("gen_isometry columns are orthonormal") {
  StreamRng rng(8, 0);
  const Isometry s = gen_isometry(rng, 7, 3);
  CHECK(s.ambient_dim() == 7);
  CHECK(s.subspace_dim() == 3);
  CHECK((s.cols().adjoint() * s.cols() - Matrix::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("fixtures match their stated matrices") {
  const Hermitian tao = fixture_tao_4x4();
  CHECK(tao.mat()(0, 0).real() == 2.0);
  CHECK(tao.mat()(2, 2).real() == 3.0);
  CHECK(tao.mat()(0, 3).real() == 1.0);

  const auto [a1, a2] = fixture_2x2_pair();
  CHECK(a1.mat()(0, 1).real() == 2.0);
  CHECK(a2.mat()(0, 0).real() == 3.0);
  CHECK(a2.mat()(0, 1).real() == 0.0);

  const Hermitian c = fixture_sqrt_conjecture_4x4();
  CHECK(c.mat()(0, 3).real() == 2.0);
  CHECK(c.mat()(3, 3).real() == 2.0);
}

TEST_CASE("special generators have the advertised structure") {
  StreamRng rng(9, 0);
  const Hermitian s = gen_scalar(rng, 4);
  CHECK((s.mat() - s.mat()(0, 0) * Matrix::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  const Hermitian rep = gen_repeated_spectrum(rng, 6);
  const RealVector lam = eigenvalues(rep).values();
  int repeats = 0;
  for (Eigen::Index i = 0; i + 1 < 6; ++i)
    if (std::abs(lam[i] - lam[i + 1]) < 1e-9) ++repeats;
  CHECK(repeats >= 3);

  const Hermitian hatw = gen_hat_witness(rng, 3);
  CHECK(hatw.dim() == 6);
  CHECK(hatw.mat().topLeftCorner(3, 3).cwiseAbs().maxCoeff() == 0.0);

  const auto [p, q] = gen_negation_pair(rng, 3);
  CHECK((p.mat() + q.mat()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(eigenvalues(p).values()[2] >= -1e-12);
}
