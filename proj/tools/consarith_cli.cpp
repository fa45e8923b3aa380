#include <algorithm>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "consarith/bench.hpp"
#include "consarith/bezout.hpp"
#include "consarith/fermat.hpp"
#include "consarith/fta.hpp"
#include "consarith/gcd.hpp"
#include "consarith/isqrt.hpp"
#include "consarith/primes.hpp"

using namespace consarith;

namespace {

std::vector<BinPos> parseList(const std::string& s) {
  std::vector<BinPos> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::size_t end = comma == std::string::npos ? s.size() : comma;
    out.push_back(parseDecimal(std::string_view(s).substr(start, end - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<UnaryNat> parseSizes(const std::string& s) {
  std::vector<UnaryNat> out;
  for (const auto& p : parseList(s)) out.push_back(posToNat(p));
  return out;
}

std::string joinFactors(const Factorization& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ",";
    out += printDecimal(fs[i]);
  }
  return out;
}

std::vector<UnaryNat> defaultSizes(const std::string& op) {
  if (op == "natGcd") return {4, 5, 6};
  if (op == "factorize") return {6, 8, 10};
  if (op == "fermat") return {8, 10, 12};
  if (op == "genPms") return {8, 16, 24};
  return {600, 1200, 2400};
}

int run(int argc, char** argv) {
  CLI::App app{"Constructive arithmetic on positive binary numerals"};
  app.require_subcommand(1);

  // gcd
  std::string gcdAlgo = "stein";
  std::string argA, argB;
  auto* gcd = app.add_subcommand("gcd", "Greatest common divisor");
  gcd->add_option("--algo", gcdAlgo)->check(CLI::IsMember({"stein", "euclid", "nat"}));
  gcd->add_option("A", argA)->required();
  gcd->add_option("B", argB)->required();

  // bezout
  std::string bezAlgo = "stein";
  auto* bez = app.add_subcommand("bezout", "Negative-free Bezout certificate");
  bez->add_option("--algo", bezAlgo)->check(CLI::IsMember({"stein", "euclid"}));
  bez->add_option("A", argA)->required();
  bez->add_option("B", argB)->required();

  // sqrt
  std::string sqrtAlgo = "fast";
  std::string argN;
  auto* sq = app.add_subcommand("sqrt", "Integer square root");
  sq->add_option("--algo", sqrtAlgo)->check(CLI::IsMember({"fast", "floor", "ceil"}));
  sq->add_option("N", argN)->required();

  auto* pr = app.add_subcommand("prime", "Primality test");
  pr->add_option("N", argN)->required();

  bool oddStep = false;
  auto* lf = app.add_subcommand("least-factor", "Least prime factor");
  lf->add_flag("--odd-step", oddStep, "skip even trial candidates");
  lf->add_option("N", argN)->required();

  std::string argList;
  auto* np = app.add_subcommand("new-prime", "A prime outside the given list");
  np->add_option("PRIMES", argList, "comma-separated primes")->required();

  std::string method = "trial";
  auto* fa = app.add_subcommand("factor", "Factorization");
  fa->add_option("--method", method)->check(CLI::IsMember({"trial", "fermat"}));
  fa->add_flag("--odd-step", oddStep, "skip even trial candidates");
  fa->add_option("N", argN)->required();

  std::string argPs, argQs;
  auto* pm = app.add_subcommand("pms", "Permutation matching two prime lists");
  pm->add_option("PS", argPs, "comma-separated primes")->required();
  pm->add_option("QS", argQs, "comma-separated primes")->required();

  std::string argP0, argP1, argQ0, argQ1;
  auto* sp = app.add_subcommand("prodsplit", "Regroup p0*p1 = q0*q1");
  sp->add_option("P0", argP0)->required();
  sp->add_option("P1", argP1)->required();
  sp->add_option("Q0", argQ0)->required();
  sp->add_option("Q1", argQ1)->required();

  std::string benchOp = "stein", sizesArg, csvPath;
  UnaryNat reps = 5;
  std::uint64_t seed = 42;
  UnaryNat maxDegree = 3;
  auto* be = app.add_subcommand("bench", "Time an operation on random inputs");
  be->add_option("--op", benchOp)
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kBenchOps),
                                                     std::end(kBenchOps))));
  be->add_option("--digits", sizesArg, "comma-separated input sizes");
  be->add_option("--reps", reps);
  be->add_option("--seed", seed);
  be->add_option("--csv", csvPath, "write one row per repetition");

  std::string fitOp;
  auto* fi = app.add_subcommand("fit", "Fit a polynomial to bench CSV data");
  fi->add_option("--csv", csvPath)->required();
  fi->add_option("--max-degree", maxDegree);
  fi->add_option("--op", fitOp, "restrict to one op");

  CLI11_PARSE(app, argc, argv);

  if (gcd->parsed()) {
    BinPos a = parseDecimal(argA), b = parseDecimal(argB);
    BinPos g = gcdAlgo == "stein"   ? steinGcd(a, b)
               : gcdAlgo == "euclid" ? euclidGcdBin(a, b)
                                     : natToPos(natGcd(posToNat(a), posToNat(b)));
    std::cout << printDecimal(g) << "\n";
  } else if (bez->parsed()) {
    BinPos a = parseDecimal(argA), b = parseDecimal(argB);
    BezoutCert c = bezAlgo == "stein" ? bezoutStein(a, b) : bezoutEuclid(a, b);
    std::cout << showBezout(c) << "\n";
  } else if (sq->parsed()) {
    if (sqrtAlgo == "ceil") {
      BinPos n = parseDecimal(argN);
      std::cout << natSqrtCeil(posToNat(n)) << "\n";
    } else {
      BinPos n = parseDecimal(argN);
      BinPos r = sqrtAlgo == "fast" ? fastSqrt(n) : posSqrtFloor(n);
      std::cout << printDecimal(r) << "\n";
    }
  } else if (pr->parsed()) {
    std::cout << (isPrimePos(parseDecimal(argN)) ? "prime" : "composite") << "\n";
  } else if (lf->parsed()) {
    std::cout << printDecimal(leastFactor(parseDecimal(argN), oddStep)) << "\n";
  } else if (np->parsed()) {
    std::vector<BinPos> ps = parseList(argList);
    UnaryNat n = ps.size();
    std::cout << printDecimal(newPrime(PosSeq(std::move(ps)), n)) << "\n";
  } else if (fa->parsed()) {
    BinPos n = parseDecimal(argN);
    if (method == "trial") {
      std::cout << joinFactors(factorize(n, oddStep)) << "\n";
    } else {
      FermatOutcome out = fermatFactor(n);
      if (out.prime)
        std::cout << "prime\n";
      else
        std::cout << printDecimal(out.q0) << " x " << printDecimal(out.q1) << "\n";
    }
  } else if (pm->parsed()) {
    std::vector<BinPos> psv = parseList(argPs), qsv = parseList(argQs);
    UnaryNat n = psv.size(), m = qsv.size();
    PermWitness w = genPms(n, m, PosSeq(std::move(psv)), PosSeq(std::move(qsv)));
    std::cout << "[";
    for (UnaryNat i = 0; i < w.bound; ++i)
      std::cout << (i ? "," : "") << w.fwd[(std::size_t)i];
    std::cout << "]\n";
  } else if (sp->parsed()) {
    auto r = prodSplit(parseDecimal(argP0), parseDecimal(argP1),
                       parseDecimal(argQ0), parseDecimal(argQ1));
    std::cout << "(" << printDecimal(r[0]) << ",(" << printDecimal(r[1]) << ",("
              << printDecimal(r[2]) << "," << printDecimal(r[3]) << ")))\n";
  } else if (be->parsed()) {
    std::vector<UnaryNat> sizes =
        sizesArg.empty() ? defaultSizes(benchOp) : parseSizes(sizesArg);
    std::vector<BenchRow> rows;
    auto samples = runBench(benchOp, sizes, reps, seed, &rows);
    for (const auto& s : samples)
      std::cout << s.op << " " << s.inputDigits << " " << s.wallTime << "\n";
    if (!csvPath.empty()) writeCsv(csvPath, rows);
  } else if (fi->parsed()) {
    auto rows = readCsv(csvPath);
    if (!fitOp.empty()) {
      rows.erase(std::remove_if(rows.begin(), rows.end(),
                                [&](const BenchRow& r) { return r.op != fitOp; }),
                 rows.end());
    }
    if (rows.empty()) throw std::runtime_error("fit: no rows selected");
    for (const auto& r : rows) {
      if (r.op != rows.front().op)
        throw std::runtime_error("fit: several ops in CSV; pick one with --op");
    }
    std::map<UnaryNat, std::vector<double>> bySize;
    for (const auto& r : rows) bySize[r.digits].push_back(r.seconds);
    std::vector<double> xs, ys;
    for (auto& [digits, ts] : bySize) {
      std::sort(ts.begin(), ts.end());
      double med = ts.size() % 2 == 1
                       ? ts[ts.size() / 2]
                       : 0.5 * (ts[ts.size() / 2 - 1] + ts[ts.size() / 2]);
      xs.push_back((double)digits);
      ys.push_back(med);
    }
    PolyFit fit = fitPoly(xs, ys, maxDegree);
    std::cout << "degree " << fit.degree << "\n";
    for (std::size_t k = 0; k < fit.coeffs.size(); ++k)
      std::cout << "x^" << (k + 1) << " " << fit.coeffs[k] << "\n";
    std::cout << "residual " << fit.residual << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
