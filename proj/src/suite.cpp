#include "reflectarr/suite.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <sstream>
#include <thread>

#include "reflectarr/errors.hpp"
#include "reflectarr/groebner.hpp"
#include "reflectarr/singular_locus.hpp"
#include "reflectarr/symbolic_powers.hpp"

namespace reflectarr {

namespace {

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

/// Line of each object opened directly inside an array that is a value of the
/// root object, in document order.
std::vector<std::size_t> query_object_lines(const std::string& text) {
  std::vector<std::size_t> lines;
  std::vector<char> stack;
  bool in_string = false;
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') ++line;
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{' || c == '[') {
      if (c == '{' && stack.size() == 2 && stack[1] == '[') lines.push_back(line);
      stack.push_back(c);
    } else if ((c == '}' || c == ']') && !stack.empty()) {
      stack.pop_back();
    }
  }
  return lines;
}

std::string require_string(const nlohmann::json& j, const char* key, std::size_t line) {
  if (!j.contains(key) || !j[key].is_string()) throw ParseError(std::string("missing string field '") + key + "'", line);
  return j[key].get<std::string>();
}

GroupSpec group_param(const nlohmann::json& params) {
  if (!params.contains("group") || !params["group"].is_string())
    throw ParseError("query needs a string 'group' parameter");
  return GroupSpec::parse(params["group"].get<std::string>());
}

unsigned uint_param(const nlohmann::json& params, const char* key, unsigned fallback) {
  if (!params.contains(key)) return fallback;
  if (!params[key].is_number_unsigned()) throw ParseError(std::string("parameter '") + key + "' must be a positive integer");
  return params[key].get<unsigned>();
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}

std::vector<int> split_ints(const std::string& field, std::size_t line) {
  std::istringstream in(field);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + tok + "'", line);
    }
  }
  return out;
}

const std::array<std::string_view, 11> kOperations = {
    "flats",       "flat-formula",        "multiplicity", "alpha",          "verify-eqJ", "determinants",
    "check",       "product-eqJ",         "product-containment", "sporadic-row", "sporadic-routes"};

std::string csv_cell(const nlohmann::json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

}  // namespace

VerificationSuite parse_suite(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!root.is_object()) throw ParseError("suite must be a JSON object", 1);
  VerificationSuite suite;
  suite.name = require_string(root, "name", 1);
  if (root.contains("budget")) {
    if (!root["budget"].is_number_unsigned() || root["budget"].get<std::uint64_t>() == 0)
      throw ParseError("'budget' must be a positive integer", 1);
    suite.budget = root["budget"].get<std::uint64_t>();
  }
  if (!root.contains("queries")) return suite;
  if (!root["queries"].is_array()) throw ParseError("'queries' must be an array", 1);
  const auto lines = query_object_lines(text);
  std::size_t k = 0;
  for (const auto& q : root["queries"]) {
    const std::size_t line = k < lines.size() ? lines[k] : 0;
    if (!q.is_object()) throw ParseError("query must be an object", line);
    SuiteQuery sq;
    sq.line = line;
    sq.id = require_string(q, "id", line);
    sq.op = require_string(q, "op", line);
    if (std::find(kOperations.begin(), kOperations.end(), sq.op) == kOperations.end())
      throw ParseError("unknown operation '" + sq.op + "'", line);
    sq.params = q.value("params", nlohmann::json::object());
    if (!sq.params.is_object()) throw ParseError("'params' must be an object", line);
    if (!q.contains("expected")) throw ParseError("query '" + sq.id + "' has no 'expected' value", line);
    sq.expected = q["expected"];
    sq.provenance = require_string(q, "provenance", line);
    if (sq.provenance != "published" && sq.provenance != "trivial" && sq.provenance != "derived")
      throw ParseError("provenance must be published, trivial or derived", line);
    suite.queries.push_back(std::move(sq));
    ++k;
  }
  return suite;
}

Evaluation evaluate(const std::string& op, const nlohmann::json& params) {
  if (op == "flats") {
    const GroupSpec spec = group_param(params);
    const std::size_t n = flats_of_codim(build_arrangement(spec), uint_param(params, "codim", 2)).size();
    return {n, ""};
  }
  if (op == "flat-formula") return {codim2_flat_formula(group_param(params)), ""};
  if (op == "multiplicity") {
    const SingularLocus L = singular_ideal_definitional(build_arrangement(group_param(params)));
    const BigInt e = hilbert_multiplicity(L.ideal).multiplicity;
    return {e.get_si(), std::to_string(L.flat_count) + " flats"};
  }
  if (op == "alpha") {
    const SingularLocus L = singular_ideal_definitional(build_arrangement(group_param(params)));
    return {alpha(L.ideal), ""};
  }
  if (op == "verify-eqJ") {
    const EqJReport r = verify_theorem_eqJ(group_param(params));
    std::string detail;
    for (const auto& c : r.checks)
      if (c.verdict != "pass") detail += c.name + ": " + c.verdict + "; ";
    return {r.verdict(), detail};
  }
  if (op == "determinants") return {combine_verdicts(determinant_identity_checks(group_param(params))), ""};
  if (op == "check") {
    ContainmentQuery q;
    q.spec = group_param(params);
    q.m = uint_param(params, "sym", 3);
    q.r = uint_param(params, "pow", 2);
    q.strategy = parse_strategy(params.value("strategy", "direct"));
    const ContainmentReport rep = check_containment(q);
    if (rep.verdict == Verdict::BudgetExceeded) throw BudgetExceeded(default_budget());
    std::string detail = rep.detail;
    if (rep.witness) {
      const bool in_sym = in_symbolic_power(*rep.witness, essential_part(build_arrangement(*q.spec)), q.m);
      detail += in_sym ? "; witness re-certified" : "; witness FAILED re-certification";
      if (!in_sym) return {"uncertified", detail};
    }
    return {to_string(rep.verdict), detail};
  }
  if (op == "product-eqJ") {
    const GroupSpec spec = group_param(params);
    if (spec.kind() != GroupSpec::Kind::Product) throw PreconditionError("product-eqJ needs a product group");
    const Ideal P = product_singular_ideal(product_factors(spec));
    const SingularLocus L = singular_ideal_definitional(build_arrangement(spec));
    return {ideal_equal(P, L.ideal) ? "equal" : "different", ""};
  }
  if (op == "product-containment") {
    const GroupSpec spec = group_param(params);
    if (spec.kind() != GroupSpec::Kind::Product) throw PreconditionError("product-containment needs a product group");
    std::vector<Arrangement> factors;
    for (const auto& f : spec.factors()) factors.push_back(build_arrangement(f));
    const ContainmentReport rep =
        product_containment(factors, uint_param(params, "sym", 3), uint_param(params, "pow", 2));
    return {to_string(rep.verdict), rep.detail};
  }
  if (op == "sporadic-row") {
    if (!params.contains("group") || !params["group"].is_string()) throw ParseError("query needs 'group'");
    const SporadicRecord* rec = find_sporadic(params["group"].get<std::string>());
    if (!rec) throw ParseError("unknown sporadic group " + params["group"].get<std::string>());
    const SporadicCheck c = sporadic_table_check(*rec);
    return {{{"e_M", c.e_M}, {"e_Q", c.e_Q}, {"e_RJ", rec->codim2_flat_count}}, ""};
  }
  if (op == "sporadic-routes") {
    nlohmann::json jac = nlohmann::json::array(), der = nlohmann::json::array();
    for (const auto& rec : sporadic_records()) {
      const SporadicCheck c = sporadic_table_check(rec);
      if (c.jacobian_route()) jac.push_back(rec.name);
      if (c.derivation_route()) der.push_back(rec.name);
    }
    return {{{"jacobian", jac}, {"derivation", der}}, ""};
  }
  throw ParseError("unknown operation '" + op + "'");
}

QueryOutcome run_query(const SuiteQuery& q, std::optional<std::uint64_t> budget) {
  std::optional<BudgetScope> scope;
  if (budget) scope.emplace(*budget);
  QueryOutcome out{q, nullptr, "", ""};
  try {
    Evaluation e = evaluate(q.op, q.params);
    out.observed = std::move(e.observed);
    out.detail = std::move(e.detail);
    out.status = out.observed == q.expected ? "match" : "mismatch";
  } catch (const BudgetExceeded& e) {
    out.status = "budget-exceeded";
    out.detail = e.what();
  } catch (const std::exception& e) {
    out.status = "error";
    out.detail = e.what();
  }
  return out;
}

int SuiteResult::exit_code() const {
  bool budget = false;
  for (const auto& o : outcomes) {
    if (o.status == "mismatch" || o.status == "error") return 2;
    if (o.status == "budget-exceeded") budget = true;
  }
  return budget ? 3 : 0;
}

nlohmann::json SuiteResult::report() const {
  nlohmann::json j;
  j["schema"] = kReportSchemaVersion;
  j["suite"] = name;
  j["results"] = nlohmann::json::array();
  std::map<std::string, int> counts;
  for (const auto& o : outcomes) {
    ++counts[o.status];
    nlohmann::json r = {{"id", o.query.id},         {"op", o.query.op},         {"params", o.query.params},
                        {"expected", o.query.expected}, {"observed", o.observed}, {"provenance", o.query.provenance},
                        {"status", o.status}};
    if (!o.detail.empty()) r["detail"] = o.detail;
    j["results"].push_back(std::move(r));
  }
  j["counts"] = counts;
  j["exit_code"] = exit_code();
  return j;
}

std::string SuiteResult::summary_csv() const {
  std::string out = "id,op,params,expected,observed,provenance,status\n";
  for (const auto& o : outcomes) {
    out += csv_cell(o.query.id) + "," + csv_cell(o.query.op) + "," + csv_cell(o.query.params) + "," +
           csv_cell(o.query.expected) + "," + csv_cell(o.observed) + "," + csv_cell(o.query.provenance) + "," +
           csv_cell(o.status) + "\n";
  }
  return out;
}

SuiteResult run_suite(const VerificationSuite& suite, unsigned jobs) {
  SuiteResult result;
  result.name = suite.name;
  result.outcomes.resize(suite.queries.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, suite.queries.size())));
  const std::uint64_t budget = suite.budget.value_or(default_budget());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < suite.queries.size(); k = next++)
      result.outcomes[k] = run_query(suite.queries[k], budget);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return result;
}

std::vector<SporadicRecord> parse_sporadic_csv(const std::string& text) {
  std::istringstream in(text);
  std::string row;
  std::vector<SporadicRecord> out;
  std::size_t line = 0;
  while (std::getline(in, row)) {
    ++line;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (row.empty()) continue;
    if (line == 1) {
      if (row != "name,exponents,coexponents,e_RJ")
        throw ParseError("expected header 'name,exponents,coexponents,e_RJ'", line);
      continue;
    }
    std::vector<std::string> cols;
    std::istringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) cols.push_back(cell);
    if (cols.size() != 4) throw ParseError("expected 4 columns, found " + std::to_string(cols.size()), line);
    SporadicRecord rec;
    rec.name = cols[0];
    rec.exponents = split_ints(cols[1], line);
    rec.coexponents = split_ints(cols[2], line);
    const auto count = split_ints(cols[3], line);
    if (count.size() != 1) throw ParseError("flat count must be one integer", line);
    rec.codim2_flat_count = count[0];
    if (rec.exponents.size() != rec.coexponents.size())
      throw ParseError("exponent and coexponent lists differ in length", line);
    out.push_back(std::move(rec));
  }
  return out;
}

std::string sporadic_data_csv(const std::vector<SporadicRecord>& records) {
  std::string out = "name,exponents,coexponents,e_RJ\n";
  for (const auto& r : records)
    out += r.name + "," + join_ints(r.exponents) + "," + join_ints(r.coexponents) + "," +
           std::to_string(r.codim2_flat_count) + "\n";
  return out;
}

std::string sporadic_report_csv(const std::vector<SporadicRecord>& records) {
  std::string out = "name,exponents,coexponents,e_M,e_Q,e_RJ,e_M_matches,e_Q_matches\n";
  for (const auto& r : records) {
    const SporadicCheck c = sporadic_table_check(r);
    out += r.name + "," + join_ints(r.exponents) + "," + join_ints(r.coexponents) + "," + std::to_string(c.e_M) +
           "," + std::to_string(c.e_Q) + "," + std::to_string(r.codim2_flat_count) + "," +
           (c.jacobian_route() ? "yes" : "no") + "," + (c.derivation_route() ? "yes" : "no") + "\n";
  }
  return out;
}

}  // namespace reflectarr
