#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su2cp/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = su2cp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_golden(const std::string& name) {
  std::ifstream f(std::string(SU2CP_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

} // namespace

TEST_CASE("spectrum golden files") {
  for (const std::string model : {"su2cp", "su2", "sl21"}) {
    const auto r = run({"spectrum", "--j", "5", "--model", model, "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == read_golden("spectrum_j5_" + model + ".csv"));
  }
}

TEST_CASE("spectrum values match the closed form") {
  const auto r = run({"spectrum", "--j", "5", "--model", "su2cp", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == std::vector<std::string>{"model", "index", "position"});
  const double expected[11] = {-5.0,
                               -std::sqrt(24.0),
                               -std::sqrt(21.0),
                               -4.0,
                               -3.0,
                               0.0,
                               3.0,
                               4.0,
                               std::sqrt(21.0),
                               std::sqrt(24.0),
                               5.0};
  for (int i = 0; i < 11; ++i)
    CHECK(std::abs(std::stod(rows[i + 1][2]) - expected[i]) < 1e-12);
}

TEST_CASE("spectrum of the trivial representation") {
  const auto r = run({"spectrum", "--j", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "model,index,position\nsu2cp,0,0\n");
}

TEST_CASE("spectrum with all models") {
  const auto csv = run({"spectrum", "--j", "5", "--model", "all"});
  CHECK(csv.code == 0);
  CHECK(parse_csv(csv.out).size() == 1 + 3 * 11);

  const auto svg = run({"spectrum", "--j", "5", "--model", "all", "--format", "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  for (const std::string label : {">su2<", ">sl21<", ">su2cp<"})
    CHECK(svg.out.find(label) != std::string::npos);
}

TEST_CASE("wavefunction table golden and values") {
  const auto r = run({"wavefunction", "--j", "1", "--n", "0", "--picture", "position"});
  REQUIRE(r.code == 0);
  CHECK(r.out == read_golden("wavefunction_j1_n0_position.csv"));
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(std::stod(rows[1][2]) == doctest::Approx(0.5));
  CHECK(std::stod(rows[2][2]) == doctest::Approx(std::sqrt(0.5)));
  CHECK(std::stod(rows[3][2]) == doctest::Approx(0.5));
  for (int i = 1; i <= 3; ++i) CHECK(rows[i][3] == "0");
}

TEST_CASE("wavefunction tables for the figure-sized representation") {
  const auto r = run({"wavefunction", "--j", "30", "--n", "0", "--n", "1", "--n", "2", "--n",
                      "60", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 1 + 4 * 61);
  for (const int n : {0, 1, 2, 60}) {
    double norm = 0.0;
    int count = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i][0] == std::to_string(n)) {
        ++count;
        const double re = std::stod(rows[i][2]);
        const double im = std::stod(rows[i][3]);
        norm += re * re + im * im;
      }
    CHECK(count == 61);
    CHECK(std::abs(norm - 1.0) < 1e-12);
  }
}

TEST_CASE("momentum picture carries the phase in the imaginary part") {
  const auto r = run({"wavefunction", "--j", "1", "--n", "0", "--picture", "momentum"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][2] == "0");
    CHECK(std::stod(rows[i][3]) > 0.0);
  }
}

TEST_CASE("wavefunction rejects out-of-range states") {
  const auto r = run({"wavefunction", "--j", "1", "--n", "5"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("transform output") {
  const auto r0 = run({"transform", "--j", "0", "--format", "json"});
  REQUIRE(r0.code == 0);
  const auto doc0 = nlohmann::json::parse(r0.out);
  CHECK(doc0["shape"] == nlohmann::json({1, 1}));
  CHECK(doc0["re"][0][0].get<double>() == 0.0);
  CHECK(doc0["im"][0][0].get<double>() == 1.0);

  const auto r1 = run({"transform", "--j", "1", "--format", "json"});
  REQUIRE(r1.code == 0);
  const auto doc1 = nlohmann::json::parse(r1.out);
  CHECK(doc1["shape"] == nlohmann::json({3, 3}));

  const auto csv = run({"transform", "--j", "1", "--format", "csv"});
  REQUIRE(csv.code == 0);
  const auto rows = parse_csv(csv.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == std::vector<std::string>{"row", "col", "re", "im"});

  CHECK(run({"transform", "--j", "1", "--format", "svg"}).code == 2);
}

TEST_CASE("verify command") {
  const auto ok = run({"verify", "--j-max", "2", "--exact-j-max", "2"});
  CHECK(ok.code == 0);
  const auto doc = nlohmann::json::parse(ok.out);
  CHECK(doc["all_pass"] == true);
  CHECK(doc["checks"].size() > 10);

  const auto tight = run({"verify", "--j-max", "1", "--exact-j-max", "1", "--tol", "1e-14"});
  CHECK(tight.code == 0);

  const auto bad =
      run({"verify", "--j-max", "2", "--exact-j-max", "2", "--debug-corrupt-mk", "1e-3"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("M^q U - U D^q") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"eigensplat"}).code == 2);
  CHECK(run({"spectrum"}).code == 2);                          // missing --j
  CHECK(run({"spectrum", "--j", "-3"}).code == 2);             // negative j
  CHECK(run({"spectrum", "--j", "2", "--model", "xx"}).code == 2);
  const auto r = run({"spectrum", "--j", "2", "--format", "tsv"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("spectrum") != std::string::npos);
}

TEST_CASE("byte-identical reruns") {
  const std::vector<std::string> cases[] = {
      {"spectrum", "--j", "7", "--model", "all", "--format", "json"},
      {"wavefunction", "--j", "4", "--n", "2", "--picture", "momentum", "--format", "json"},
      {"transform", "--j", "3", "--format", "csv"},
      {"spectrum", "--j", "3", "--format", "svg"},
  };
  for (const auto& args : cases) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("file output matches stream output") {
  const std::string path = "cli_test_output.csv";
  const auto direct = run({"spectrum", "--j", "3"});
  const auto filed = run({"spectrum", "--j", "3", "--output", path});
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  CHECK(os.str() == direct.out);
  f.close();
  std::remove(path.c_str());
}
