#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eulerchi/report.hpp"

namespace {

using namespace eulerchi;

std::vector<long long> parse_ll_list(const std::string& s,
                                     const std::string& what) {
  std::vector<long long> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t pos = 0;
      long long v = std::stoll(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": bad integer '" + item + "'");
    }
  }
  require(!out.empty(), what + ": empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  for (long long v : parse_ll_list(s, what)) {
    require(v >= INT_MIN && v <= INT_MAX, what + ": value out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

struct ChiArgs {
  std::string group;
  int m = 0;
  long long p = 0;
  bool pGiven = false;
  std::string weight;
  bool breakdown = false;
};

struct TableArgs {
  std::string which;
  int maxM = -1;
  std::string primes;
  std::string weights;
  int bound = -1;
};

struct AuditArgs {
  std::string primes;
  int bound = 4;
};

int run_chi(const ChiArgs& args, Format fmt, bool selfCheck) {
  const Weight w = [&] {
    Weight out;
    for (int v : parse_int_list(args.weight, "--weight")) out.push_back(v);
    return out;
  }();
  ChiResult res;
  if (args.group == "gl") {
    res = chi_gl(args.m, w);
  } else if (args.group == "sl") {
    res = chi_sl_result(args.m, w);
  } else if (args.group == "gamma1" || args.group == "gamma1-sl") {
    require(args.pGiven, "--p is required for the gamma1 groups");
    res = args.group == "gamma1" ? chi_gamma1(args.m, args.p, w)
                                 : chi_gamma1_sl_result(args.m, args.p, w);
  } else {
    throw std::invalid_argument(
        "--group must be one of gl, sl, gamma1, gamma1-sl");
  }
  if (selfCheck) self_check(res);
  std::cout << render_chi(res, fmt, args.breakdown);
  return 0;
}

int run_classes(int m, Format fmt, bool selfCheck) {
  if (selfCheck) {
    for (const auto& cls : enumerate_classes(m))
      ensure(Rational(cls.resultant()) == class_resultant_oracle(cls),
             "self-check: resultant mismatch for class " + cls.label());
  }
  std::cout << render_classes(m, fmt);
  return 0;
}

int run_table(const TableArgs& args, Format fmt) {
  if (args.which == "sl2gl2") {
    require(args.maxM >= 0, "sl2gl2 requires --max");
    std::cout << render_table_sl2gl2(args.maxM, fmt);
  } else if (args.which == "cuspdims") {
    require(!args.primes.empty(), "cuspdims requires --p");
    require(!args.weights.empty(), "cuspdims requires --k");
    std::cout << render_table_cuspdims(parse_ll_list(args.primes, "--p"),
                                       parse_int_list(args.weights, "--k"),
                                       fmt);
  } else if (args.which == "gamma1-3p") {
    require(!args.primes.empty(), "gamma1-3p requires --p");
    require(args.bound >= 0, "gamma1-3p requires --bound");
    const auto ps = parse_ll_list(args.primes, "--p");
    require(ps.size() == 1, "gamma1-3p takes a single prime");
    std::cout << render_table_gamma1_3p(ps[0], args.bound, fmt);
  } else {
    throw std::invalid_argument(
        "--which must be one of sl2gl2, cuspdims, gamma1-3p");
  }
  return 0;
}

int run_audit(const AuditArgs& args, Format fmt) {
  require(!args.primes.empty(), "audit requires --p");
  const auto ps = parse_ll_list(args.primes, "--p");
  require(ps.size() <= 50, "audit: at most 50 primes");
  std::cout << render_audit(audit(ps, args.bound), fmt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact homological Euler characteristics of GL_m(Z), SL_m(Z) and the "
      "congruence subgroups Gamma_1(m,p), with per-class breakdowns and a "
      "closed-form audit"};
  app.require_subcommand(1);

  std::string format = "md";
  bool selfCheck = false;
  app.add_option("--format", format, "output format: md, json or csv")
      ->capture_default_str();
  app.add_flag("--self-check", selfCheck,
               "cross-validate resultants and traces against the Q(zeta_12) "
               "oracles");

  ChiArgs chiArgs;
  auto* chiCmd = app.add_subcommand("chi", "one Euler characteristic");
  chiCmd->fallthrough();
  chiCmd->add_option("--group", chiArgs.group, "gl, sl, gamma1 or gamma1-sl")
      ->required();
  chiCmd->add_option("--m", chiArgs.m, "rank")->required();
  chiCmd->add_option("--p", chiArgs.p, "prime level (gamma1 groups)");
  chiCmd
      ->add_option("--weight", chiArgs.weight,
                   "highest weight, comma-separated epsilon coordinates")
      ->required();
  chiCmd->add_flag("--breakdown", chiArgs.breakdown,
                   "one row per class contribution");

  int classesM = 0;
  auto* classesCmd =
      app.add_subcommand("classes", "torsion classes of GL_m(Z)");
  classesCmd->fallthrough();
  classesCmd->add_option("--m", classesM, "rank")->required();

  TableArgs tableArgs;
  auto* tableCmd = app.add_subcommand("table", "table sweeps");
  tableCmd->fallthrough();
  tableCmd
      ->add_option("--which", tableArgs.which,
                   "sl2gl2, cuspdims or gamma1-3p")
      ->required();
  tableCmd->add_option("--max", tableArgs.maxM, "largest weight (sl2gl2)");
  tableCmd->add_option("--p", tableArgs.primes, "comma-separated primes");
  tableCmd->add_option("--k", tableArgs.weights,
                       "comma-separated weights (cuspdims)");
  tableCmd->add_option("--bound", tableArgs.bound,
                       "weight bound (gamma1-3p)");

  AuditArgs auditArgs;
  auto* auditCmd =
      app.add_subcommand("audit", "recompute every stated closed form");
  auditCmd->fallthrough();
  auditCmd->add_option("--p", auditArgs.primes, "comma-separated primes")
      ->required();
  auditCmd->add_option("--bound", auditArgs.bound, "weight bound (0..12)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    const Format fmt = eulerchi::parse_format(format);
    chiArgs.pGiven = chiCmd->count("--p") > 0;
    if (*chiCmd) return run_chi(chiArgs, fmt, selfCheck);
    if (*classesCmd) return run_classes(classesM, fmt, selfCheck);
    if (*tableCmd) return run_table(tableArgs, fmt);
    if (*auditCmd) return run_audit(auditArgs, fmt);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const eulerchi::InternalError& e) {
    std::cerr << "internal self-check failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
