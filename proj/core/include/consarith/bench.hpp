#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "consarith/binpos.hpp"

namespace consarith {

struct Sample {
  std::string op;
  UnaryNat inputDigits = 0;
  std::uint64_t seed = 0;
  double wallTime = 0.0;  // median over reps, seconds
  UnaryNat reps = 0;
};

struct BenchRow {
  std::string op;
  UnaryNat digits = 0;
  std::uint64_t seed = 0;
  UnaryNat rep = 0;
  double seconds = 0.0;
};

struct PolyFit {
  UnaryNat degree = 0;
  std::vector<double> coeffs;  // x^1 .. x^degree; no constant term
  double residual = 0.0;       // root mean square over the fitted points
};

// Operations: stein, euclidBin, natGcd, bezoutStein, bezoutEuclid, posSqrt,
// fastSqrt, factorize, fermat, genPms. Inputs are derived deterministically
// from the seed, op and size; for genPms the size counts prime factors
// rather than decimal digits. Throws std::invalid_argument on an unknown op
// or a size below 1. rows, when given, collects one entry per repetition.
std::vector<Sample> runBench(const std::string& op,
                             const std::vector<UnaryNat>& sizes, UnaryNat reps,
                             std::uint64_t seed,
                             std::vector<BenchRow>* rows = nullptr);

extern const char* const kBenchOps[10];

// Uniform decimal string of the given length with a nonzero leading digit.
std::string randomDecimal(std::mt19937_64& rng, UnaryNat digits);

void writeCsv(const std::string& path, const std::vector<BenchRow>& rows);
std::vector<BenchRow> readCsv(const std::string& path);

// Least-squares fit of y ~ c1*x + ... + cd*x^d. The degree drops below
// maxDegree when the design matrix is rank deficient.
PolyFit fitPoly(const std::vector<double>& xs, const std::vector<double>& ys,
                UnaryNat maxDegree);

double evalPoly(const PolyFit& fit, double x);

// Least-squares slope of log y against log x.
double logLogSlope(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace consarith
