#include "consarith/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/QR>

#include "consarith/bezout.hpp"
#include "consarith/fermat.hpp"
#include "consarith/fta.hpp"
#include "consarith/gcd.hpp"
#include "consarith/isqrt.hpp"
#include "consarith/primes.hpp"

namespace consarith {

const char* const kBenchOps[10] = {"stein",     "euclidBin",    "natGcd",
                                   "bezoutStein", "bezoutEuclid", "posSqrt",
                                   "fastSqrt",  "factorize",    "fermat",
                                   "genPms"};

std::string randomDecimal(std::mt19937_64& rng, UnaryNat digits) {
  std::uniform_int_distribution<int> lead(1, 9), any(0, 9);
  std::string s;
  s.reserve((std::size_t)digits);
  s.push_back((char)('0' + lead(rng)));
  for (UnaryNat i = 1; i < digits; ++i) s.push_back((char)('0' + any(rng)));
  return s;
}

namespace {

// First n primes, by trial division; bench sizes stay small.
std::vector<BinPos> firstPrimes(UnaryNat n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t c = 2; ps.size() < n; ++c) {
    bool prime = true;
    for (auto p : ps) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) ps.push_back(c);
  }
  std::vector<BinPos> out;
  out.reserve(ps.size());
  for (auto p : ps) out.emplace_back(p);
  return out;
}

using Runner = std::function<void()>;

// Builds the closure to be timed. Input generation stays outside the clock.
Runner makeRunner(const std::string& op, UnaryNat size, std::mt19937_64& rng) {
  auto pick = [&](UnaryNat d) { return parseDecimal(randomDecimal(rng, d)); };
  if (op == "stein") {
    BinPos a = pick(size), b = pick(size);
    return [a, b] { steinGcd(a, b); };
  }
  if (op == "euclidBin") {
    BinPos a = pick(size), b = pick(size);
    return [a, b] { euclidGcdBin(a, b); };
  }
  if (op == "natGcd") {
    if (size > 19) throw std::invalid_argument("natGcd: at most 19 digits");
    UnaryNat a = posToNat(pick(size)), b = posToNat(pick(size));
    return [a, b] { natGcd(a, b); };
  }
  if (op == "bezoutStein") {
    BinPos a = pick(size), b = pick(size);
    return [a, b] { bezoutStein(a, b); };
  }
  if (op == "bezoutEuclid") {
    BinPos a = pick(size), b = pick(size);
    return [a, b] { bezoutEuclid(a, b); };
  }
  if (op == "posSqrt") {
    BinPos a = pick(size);
    return [a] { posSqrtFloor(a); };
  }
  if (op == "fastSqrt") {
    BinPos a = pick(size);
    return [a] { fastSqrt(a); };
  }
  if (op == "factorize") {
    BinPos a = pick(size);
    return [a] { factorize(a); };
  }
  if (op == "fermat") {
    // An odd number with a balanced split nearby keeps the scan short
    // enough to time: product of two primes of half the digit count.
    auto oddPrimeNear = [&](UnaryNat d) {
      BinPos c = pick(d);
      if (c.isEven()) c = addSmall(c, 1);
      while (!isPrimePos(c)) c = addSmall(c, 2);
      return c;
    };
    UnaryNat half = size / 2 + 1;
    BinPos a = mulBin(oddPrimeNear(half), oddPrimeNear(half));
    return [a] { fermatFactor(a); };
  }
  if (op == "genPms") {
    std::vector<BinPos> base = firstPrimes(size);
    std::vector<BinPos> shuffled(base);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    PosSeq ps{std::move(base)}, qs{std::move(shuffled)};
    UnaryNat n = size;
    return [ps, qs, n] { genPms(n, n, ps, qs); };
  }
  throw std::invalid_argument("runBench: unknown op " + op);
}

}  // namespace

std::vector<Sample> runBench(const std::string& op,
                             const std::vector<UnaryNat>& sizes, UnaryNat reps,
                             std::uint64_t seed, std::vector<BenchRow>* rows) {
  if (reps == 0) throw std::invalid_argument("runBench: reps must be positive");
  std::vector<Sample> out;
  for (UnaryNat size : sizes) {
    if (size < 1) throw std::invalid_argument("runBench: size below 1");
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * (size + 1)));
    Runner run = makeRunner(op, size, rng);
    std::vector<double> times;
    times.reserve((std::size_t)reps);
    for (UnaryNat r = 0; r < reps; ++r) {
      auto t0 = std::chrono::steady_clock::now();
      run();
      auto t1 = std::chrono::steady_clock::now();
      double secs = std::chrono::duration<double>(t1 - t0).count();
      times.push_back(secs);
      if (rows) rows->push_back({op, size, seed, r, secs});
    }
    std::sort(times.begin(), times.end());
    double median = times.size() % 2 == 1
                        ? times[times.size() / 2]
                        : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]);
    out.push_back({op, size, seed, median, reps});
  }
  return out;
}

void writeCsv(const std::string& path, const std::vector<BenchRow>& rows) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("writeCsv: cannot open " + path);
  f << "op,digits,seed,rep,seconds\n";
  f.precision(17);
  for (const auto& r : rows) {
    f << r.op << ',' << r.digits << ',' << r.seed << ',' << r.rep << ','
      << r.seconds << '\n';
  }
}

std::vector<BenchRow> readCsv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("readCsv: cannot open " + path);
  std::string line;
  if (!std::getline(f, line) || line != "op,digits,seed,rep,seconds")
    throw std::runtime_error("readCsv: bad header in " + path);
  std::vector<BenchRow> rows;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    BenchRow r;
    std::string field;
    std::getline(ss, r.op, ',');
    std::getline(ss, field, ',');
    r.digits = std::stoull(field);
    std::getline(ss, field, ',');
    r.seed = std::stoull(field);
    std::getline(ss, field, ',');
    r.rep = std::stoull(field);
    std::getline(ss, field, ',');
    r.seconds = std::stod(field);
    rows.push_back(std::move(r));
  }
  return rows;
}

PolyFit fitPoly(const std::vector<double>& xs, const std::vector<double>& ys,
                UnaryNat maxDegree) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("fitPoly: need matching nonempty samples");
  if (maxDegree < 1) throw std::invalid_argument("fitPoly: degree below 1");
  const std::size_t n = xs.size();
  double xmax = *std::max_element(xs.begin(), xs.end());
  if (xmax <= 0) throw std::invalid_argument("fitPoly: needs positive x");

  // Monomials on x rescaled to [0,1] keep the normal geometry sane; the
  // coefficients are unscaled afterwards.
  for (UnaryNat d = std::min<UnaryNat>(maxDegree, n); d >= 1; --d) {
    Eigen::MatrixXd A(n, (Eigen::Index)d);
    for (std::size_t i = 0; i < n; ++i) {
      double t = xs[i] / xmax, m = 1.0;
      for (UnaryNat k = 0; k < d; ++k) {
        m *= t;
        A((Eigen::Index)i, (Eigen::Index)k) = m;
      }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    if ((UnaryNat)qr.rank() < d) continue;  // drop the degree and retry
    Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(ys.data(), (Eigen::Index)n);
    Eigen::VectorXd c = qr.solve(y);
    PolyFit fit;
    fit.degree = d;
    fit.coeffs.resize((std::size_t)d);
    double scale = 1.0;
    for (UnaryNat k = 0; k < d; ++k) {
      scale /= xmax;
      fit.coeffs[(std::size_t)k] = c((Eigen::Index)k) * scale;
    }
    fit.residual = std::sqrt((A * c - y).squaredNorm() / (double)n);
    return fit;
  }
  throw std::runtime_error("fitPoly: no usable degree");
}

double evalPoly(const PolyFit& fit, double x) {
  double acc = 0.0;
  for (std::size_t k = fit.coeffs.size(); k-- > 0;) {
    acc = (acc + fit.coeffs[k]) * x;
  }
  return acc;
}

double logLogSlope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("logLogSlope: need at least two samples");
  std::size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace consarith
