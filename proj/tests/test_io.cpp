#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "sprd/ensemble.hpp"
#include "sprd/io.hpp"
#include "test_support.hpp"

using namespace sprd;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    char tmpl[] = "/tmp/sprd_io_test_XXXXXX";
    const int fd = mkstemp(tmpl);
    REQUIRE(fd >= 0);
    close(fd);
    path = tmpl;
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("matrix JSON round-trips complex matrices") {
  StreamRng rng(400, 0);
  const Matrix m = gen_complex_gaussian(rng, 3, 4);
  const Matrix back = matrix_from_json(matrix_to_json(m));
  CHECK((m - back).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("real matrices serialize without an imaginary part") {
  Matrix m(2, 2);
  m << 1.5, -2.0, 0.0, 3.25;
  const Json j = matrix_to_json(m);
  CHECK_FALSE(j.contains("im"));
  CHECK(j["rows"] == 2);
  CHECK(j["re"][1][1] == 3.25);
  const Matrix back = matrix_from_json(j);
  CHECK((m - back).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("matrix JSON rejects malformed input") {
  CHECK_THROWS_AS(matrix_from_json(Json{{"rows", 2}, {"cols", 2}}),
                  invalid_input);
  CHECK_THROWS_AS(
      matrix_from_json(Json{{"rows", 0}, {"cols", 1}, {"re", Json::array()}}),
      invalid_input);
  // Wrong row count.
  Json j;
  j["rows"] = 2;
  j["cols"] = 1;
  j["re"] = Json::array({Json::array({1.0})});
  CHECK_THROWS_AS(matrix_from_json(j), invalid_input);
  // Ragged columns.
  j["re"] = Json::array({Json::array({1.0}), Json::array({1.0, 2.0})});
  CHECK_THROWS_AS(matrix_from_json(j), invalid_input);
}

TEST_CASE("plain text parsing") {
  std::istringstream in("1 2\n3 4\n");
  const Matrix m = matrix_from_text(in);
  CHECK(m.rows() == 2);
  CHECK(m(1, 0).real() == 3.0);

  std::istringstream empty("\n  \n");
  CHECK_THROWS_AS(matrix_from_text(empty), invalid_input);
  std::istringstream ragged("1 2\n3\n");
  CHECK_THROWS_AS(matrix_from_text(ragged), invalid_input);
}

TEST_CASE("load_matrix sniffs JSON versus text") {
  Matrix m(2, 2);
  m << 1, 2, 2, 5;
  const TempFile jf(matrix_to_json(m).dump());
  CHECK((load_matrix(jf.path) - m).cwiseAbs().maxCoeff() == 0.0);

  const TempFile tf("  1 2\n2 5\n");
  CHECK((load_matrix(tf.path) - m).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(load_matrix("/nonexistent/path/matrix.json"), invalid_input);
}

TEST_CASE("majorization report serialization") {
  RealVector x(2), y(2);
  x << 2, 2;
  y << 4, 0;
  const Json j = report_to_json(submajorizes(x, y, 1e-12));
  CHECK(j["relation"] == "submajorized");
  CHECK(j["verdict"] == true);
  CHECK(j["margins"].size() == 2);
  CHECK(j["margins"][0] == 2.0);
  CHECK(j["min_margin"] == 0.0);
  CHECK(j["trace_gap"] == 0.0);
  CHECK(j["padded_length"] == 2);

  const Json jm = report_to_json(majorizes(x, y, 1e-12));
  CHECK(jm["relation"] == "majorized");
}
