#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "reflectarr/errors.hpp"
#include "reflectarr/singular_locus.hpp"
#include "reflectarr/suite.hpp"
#include "reflectarr/symbolic_powers.hpp"

using namespace reflectarr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 4;
constexpr int kExitPrecondition = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

struct Options {
  std::string group;
  std::string out;
  std::string method = "definitional";
  unsigned codim = 2;
  bool list = false;
  unsigned sym = 3;
  unsigned pow = 2;
  std::string strategy = "direct";
  std::uint64_t budget = 0;
  std::string expect;
  std::string provenance;
  bool sporadic = false;
  std::string csv;
  std::string suite_file;
  std::string out_dir = ".";
  unsigned jobs = 0;
  bool stable = false;
};

int cmd_build(const Options& o) {
  emit(build_arrangement(GroupSpec::parse(o.group)).serialize(), o.out);
  return kExitOk;
}

int cmd_singular_ideal(const Options& o) {
  const GroupSpec spec = GroupSpec::parse(o.group);
  std::optional<Ideal> J;
  if (o.method == "definitional") {
    const SingularLocus L = singular_ideal_definitional(build_arrangement(spec));
    if (L.empty_locus) std::cerr << "empty singular locus\n";
    J = L.ideal;
  } else if (o.method == "explicit") {
    J = explicit_generators(spec);
  } else if (o.method == "jacobian") {
    const InvariantSet inv = basic_invariants(spec);
    J = Ideal(maximal_minors(jacobian_matrix(inv, spec.nvars() - 1)));
  } else if (o.method == "derivation") {
    J = Ideal(maximal_minors(derivation_matrix(spec, spec.nvars() - 1)));
  } else if (o.method == "product") {
    if (spec.kind() != GroupSpec::Kind::Product) throw PreconditionError("--method product needs a product group");
    J = product_singular_ideal(product_factors(spec));
  } else {
    throw ParseError("unknown method '" + o.method + "'");
  }
  std::vector<MultiPoly> gens;
  for (const auto& g : J->gens()) gens.push_back(g.monic());
  emit(Ideal(J->nvars(), J->field(), std::move(gens)).serialize(), o.out);
  return kExitOk;
}

int cmd_flats(const Options& o) {
  const Arrangement A = build_arrangement(GroupSpec::parse(o.group));
  const auto flats = flats_of_codim(A, o.codim);
  std::ostringstream out;
  out << flats.size() << "\n";
  if (o.list) {
    for (const auto& X : flats) {
      out << "{";
      for (std::size_t k = 0; k < X.incident.size(); ++k) out << (k ? "," : "") << X.incident[k];
      out << "}";
      for (const auto& f : X.forms(A.nvars(), A.field())) out << " ; " << f.to_string();
      out << "\n";
    }
  }
  emit(out.str(), o.out);
  return kExitOk;
}

int verdict_exit(Verdict v, const Options& o) {
  std::cout << upper(to_string(v));
  int code = v == Verdict::BudgetExceeded ? kExitBudget : kExitOk;
  if (!o.expect.empty()) {
    const bool match = to_string(v) == o.expect;
    std::cout << " (expected " << o.expect;
    if (!o.provenance.empty()) std::cout << ", " << o.provenance;
    std::cout << (match ? ", match)" : ", MISMATCH)");
    if (!match && code == kExitOk) code = kExitMismatch;
  }
  std::cout << "\n";
  return code;
}

int cmd_check(const Options& o, Strategy strategy) {
  ContainmentQuery q;
  q.spec = GroupSpec::parse(o.group);
  q.m = o.sym;
  q.r = o.pow;
  q.strategy = strategy;
  if (o.budget) q.budget = o.budget;
  const ContainmentReport rep = check_containment(q);
  if (!o.out.empty()) emit(rep.to_json(!o.stable).dump(2) + "\n", o.out);
  const int code = verdict_exit(rep.verdict, o);
  if (rep.witness)
    std::cout << "witness degree " << rep.witness->degree() << " (" << rep.witness_source << "): "
              << rep.witness->to_string() << "\n";
  if (!rep.detail.empty()) std::cout << rep.detail << "\n";
  return code;
}

int cmd_table(const Options& o) {
  if (!o.sporadic) throw ParseError("table: only --sporadic is available");
  const auto records = o.csv.empty() ? sporadic_records() : parse_sporadic_csv(read_file(o.csv));
  emit(sporadic_report_csv(records), o.out);
  return kExitOk;
}

int cmd_verify_eqJ(const Options& o) {
  std::optional<std::uint64_t> budget;
  if (o.budget) budget = o.budget;
  const EqJReport rep = verify_theorem_eqJ(GroupSpec::parse(o.group), budget);
  emit(rep.to_json(!o.stable).dump(2) + "\n", o.out);
  if (!o.out.empty()) std::cout << upper(rep.verdict()) << "\n";
  const std::string v = rep.verdict();
  return v == "pass" ? kExitOk : v == "budget-exceeded" ? kExitBudget : kExitMismatch;
}

int cmd_suite(const Options& o) {
  VerificationSuite suite = parse_suite(read_file(o.suite_file));
  if (o.budget) suite.budget = o.budget;
  const SuiteResult result = run_suite(suite, o.jobs);
  std::filesystem::create_directories(o.out_dir);
  const std::filesystem::path dir(o.out_dir);
  emit(result.report().dump(2) + "\n", (dir / "report.json").string());
  emit(result.summary_csv(), (dir / "summary.csv").string());
  std::size_t matched = 0;
  for (const auto& q : result.outcomes) {
    if (q.status == "match") ++matched;
    else std::cout << q.query.id << ": " << q.status << " (expected " << q.query.expected.dump() << ", observed "
                   << q.observed.dump() << ")" << (q.detail.empty() ? "" : " " + q.detail) << "\n";
  }
  std::cout << suite.name << ": " << matched << "/" << result.outcomes.size() << " match\n";
  return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflection arrangement singular loci and symbolic power containments"};
  app.require_subcommand(1);
  Options o;

  auto group_opt = [&](CLI::App* sub) { sub->add_option("--group,-g", o.group, "group, e.g. A3, G(3,3,3), A2xA2")->required(); };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out,-o", o.out, "output file (default stdout)"); };
  auto budget_opt = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "reduction-step ceiling (default REFLECTARR_BUDGET or 2e9)");
  };
  auto verify_opts = [&](CLI::App* sub) {
    sub->add_option("--expect", o.expect, "expected verdict, enables verify mode")
        ->check(CLI::IsMember({"holds", "fails", "abstain", "budget-exceeded"}));
    sub->add_option("--provenance", o.provenance, "provenance of the expected verdict")
        ->check(CLI::IsMember({"published", "trivial", "derived"}));
  };

  auto* build = app.add_subcommand("build", "print the arrangement of a group");
  group_opt(build);
  out_opt(build);

  auto* sing = app.add_subcommand("singular-ideal", "print generators of J(A)");
  group_opt(sing);
  out_opt(sing);
  sing->add_option("--method", o.method, "definitional | explicit | jacobian | derivation | product");

  auto* flats = app.add_subcommand("flats", "count flats of codimension 2 or 3");
  group_opt(flats);
  out_opt(flats);
  flats->add_option("--codim", o.codim, "2 or 3")->check(CLI::IsMember({2u, 3u}));
  flats->add_flag("--list", o.list, "also list incident hyperplanes and basis forms");

  auto* check = app.add_subcommand("check", "decide J^(sym) in J^pow");
  group_opt(check);
  out_opt(check);
  budget_opt(check);
  verify_opts(check);
  check->add_option("--sym", o.sym, "symbolic exponent")->check(CLI::PositiveNumber);
  check->add_option("--pow", o.pow, "ordinary exponent")->check(CLI::PositiveNumber);
  check->add_option("--strategy", o.strategy, "direct | reduce")->check(CLI::IsMember({"direct", "reduce"}));
  check->add_flag("--stable", o.stable, "omit timings from the JSON report");

  auto* reduce = app.add_subcommand("reduce", "decide J^(3) in J^2 through codimension 2 and 3 flats");
  group_opt(reduce);
  out_opt(reduce);
  budget_opt(reduce);
  verify_opts(reduce);
  reduce->add_flag("--stable", o.stable, "omit timings from the JSON report");

  auto* table = app.add_subcommand("table", "multiplicity table of the exceptional groups");
  table->add_flag("--sporadic", o.sporadic, "exceptional groups G23..G37")->required();
  table->add_option("--csv", o.csv, "read the data table from this CSV instead of the built-in copy");
  out_opt(table);

  auto* eqj = app.add_subcommand("verify-eqJ", "compare every construction of J(A)");
  group_opt(eqj);
  out_opt(eqj);
  budget_opt(eqj);
  eqj->add_flag("--stable", o.stable, "omit timings from the JSON report");

  auto* suite = app.add_subcommand("suite", "run a verification suite");
  suite->add_option("--file,-f", o.suite_file, "suite.json")->required();
  suite->add_option("--out-dir", o.out_dir, "directory for report.json and summary.csv");
  suite->add_option("--jobs,-j", o.jobs, "worker threads (0 = hardware)");
  budget_opt(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return cmd_build(o);
    if (*sing) return cmd_singular_ideal(o);
    if (*flats) return cmd_flats(o);
    if (*check) return cmd_check(o, parse_strategy(o.strategy));
    if (*reduce) return cmd_check(o, Strategy::Reduce);
    if (*table) return cmd_table(o);
    if (*eqj) return cmd_verify_eqJ(o);
    if (*suite) return cmd_suite(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedConstruction& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
