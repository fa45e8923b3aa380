#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "consarith/bench.hpp"

using namespace consarith;

TEST_CASE("random decimal strings are well formed and reproducible") {
  std::mt19937_64 a(99), b(99);
  for (int i = 0; i < 50; ++i) {
    std::string s = randomDecimal(a, 40);
    CHECK(s.size() == 40);
    CHECK(s[0] != '0');
    for (char c : s) CHECK((c >= '0' && c <= '9'));
    CHECK(s == randomDecimal(b, 40));
  }
}

TEST_CASE("timing runs produce one sample per size and one row per rep") {
  std::vector<BenchRow> rows;
  auto samples = runBench("stein", {5, 8}, 3, 123, &rows);
  REQUIRE(samples.size() == 2);
  CHECK(samples[0].op == "stein");
  CHECK(samples[0].inputDigits == 5);
  CHECK(samples[1].inputDigits == 8);
  CHECK(samples[0].reps == 3);
  CHECK(samples[0].wallTime >= 0.0);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].rep == 0);
  CHECK(rows[2].rep == 2);
  CHECK_THROWS_AS(runBench("nosuchop", {5}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(runBench("stein", {0}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(runBench("stein", {5}, 0, 1), std::invalid_argument);
  for (const char* op : kBenchOps) {
    // Every advertised operation must run end to end on a tiny size.
    UnaryNat size = 4;
    CHECK(runBench(op, {size}, 1, 7).size() == 1);
  }
}

TEST_CASE("CSV round-trip with the fixed header") {
  std::vector<BenchRow> rows;
  runBench("fastSqrt", {6, 9}, 2, 321, &rows);
  std::string path = "bench_roundtrip_tmp.csv";
  writeCsv(path, rows);
  auto back = readCsv(path);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].op == rows[i].op);
    CHECK(back[i].digits == rows[i].digits);
    CHECK(back[i].seed == rows[i].seed);
    CHECK(back[i].rep == rows[i].rep);
    CHECK(back[i].seconds == doctest::Approx(rows[i].seconds).epsilon(1e-12));
  }
  // Header is part of the format contract.
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f);
  char line[64] = {0};
  REQUIRE(fgets(line, sizeof line, f));
  fclose(f);
  CHECK(std::string(line) == "op,digits,seed,rep,seconds\n");
  remove(path.c_str());
  CHECK_THROWS(readCsv("does_not_exist.csv"));
}

TEST_CASE("polynomial fits recover planted coefficients") {
  std::vector<double> xs, ys;
  // y = 2e-9 x + 3.5e-6 x^2 + 1.2e-8 x^3, no constant term.
  std::vector<double> planted{2e-9, 3.5e-6, 1.2e-8};
  for (double x = 50; x <= 1000; x += 50) {
    xs.push_back(x);
    ys.push_back(planted[0] * x + planted[1] * x * x + planted[2] * x * x * x);
  }
  PolyFit fit = fitPoly(xs, ys, 3);
  REQUIRE(fit.degree == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(std::fabs(fit.coeffs[k] - planted[k]) <=
          1e-6 * std::fabs(planted[k]));
  }
  CHECK(fit.residual <= 1e-9 * ys.back());
  CHECK(evalPoly(fit, 500.0) == doctest::Approx(planted[0] * 500 +
                                                planted[1] * 250000 +
                                                planted[2] * 1.25e8));
}

TEST_CASE("rank-deficient designs drop the degree") {
  // Three distinct points cannot pin six coefficients.
  std::vector<double> xs{1, 2, 3}, ys{2, 8, 18};  // y = 2 x^2
  PolyFit fit = fitPoly(xs, ys, 6);
  CHECK(fit.degree <= 3);
  for (double x : xs) {
    CHECK(evalPoly(fit, x) == doctest::Approx(2 * x * x).epsilon(1e-9));
  }
  CHECK_THROWS_AS(fitPoly({}, {}, 2), std::invalid_argument);
  CHECK_THROWS_AS(fitPoly({1, 2}, {1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(fitPoly(xs, ys, 0), std::invalid_argument);
}

TEST_CASE("log-log slopes of pure powers") {
  std::vector<double> xs{100, 200, 400, 800}, y1, y2;
  for (double x : xs) {
    y1.push_back(3.0 * x * x);
    y2.push_back(0.5 * x * x * x);
  }
  CHECK(logLogSlope(xs, y1) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(logLogSlope(xs, y2) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK_THROWS_AS(logLogSlope({1.0}, {1.0}), std::invalid_argument);
}
