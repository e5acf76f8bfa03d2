#include "reflectarr/symbolic_powers.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "reflectarr/errors.hpp"
#include "reflectarr/linalg.hpp"
#include "reflectarr/singular_locus.hpp"

namespace reflectarr {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::BudgetExceeded: return "budget-exceeded";
    case Verdict::Abstain: return "abstain";
  }
  return "?";
}

std::string to_string(Strategy s) { return s == Strategy::Direct ? "direct" : "reduce"; }

Strategy parse_strategy(std::string_view text) {
  if (text == "direct") return Strategy::Direct;
  if (text == "reduce") return Strategy::Reduce;
  throw ParseError("unknown strategy '" + std::string(text) + "'");
}

nlohmann::json ContainmentReport::to_json(bool with_timings) const {
  nlohmann::json j;
  j["schema"] = kReportSchemaVersion;
  j["query"] = {{"subject", subject}, {"sym", m}, {"pow", r}, {"strategy", reflectarr::to_string(strategy)}};
  j["verdict"] = reflectarr::to_string(verdict);
  if (witness) {
    j["witness"] = witness->to_string();
    j["witness_degree"] = witness->degree();
    j["witness_nvars"] = witness->nvars();
    j["witness_source"] = witness_source;
  }
  j["trace"] = nlohmann::json::array();
  for (const auto& t : trace) {
    nlohmann::json e = {{"flat", t.flat}, {"codim", t.codim}, {"fixer", t.fixer},
                        {"verdict", reflectarr::to_string(t.verdict)}};
    if (!t.note.empty()) e["note"] = t.note;
    j["trace"].push_back(std::move(e));
  }
  j["hashes"] = hashes;
  if (!detail.empty()) j["detail"] = detail;
  if (with_timings) j["seconds"] = seconds;
  return j;
}

namespace {

std::vector<MultiPoly> prime_power_gens(const Flat& X, unsigned nvars, const CyclotomicField& field, unsigned m) {
  const auto forms = X.forms(nvars, field);
  std::vector<MultiPoly> gens;
  for (unsigned a = 0; a <= m; ++a) gens.push_back((forms[0].pow(a) * forms[1].pow(m - a)).monic());
  return gens;
}

std::string incident_label(const Flat& X) {
  std::string s = "{";
  for (std::size_t k = 0; k < X.incident.size(); ++k) s += (k ? "," : "") + std::to_string(X.incident[k]);
  return s + "}";
}

Ideal monic_basis_ideal(const Ideal& I) {
  std::vector<MultiPoly> gens;
  for (const auto& g : I.groebner().elements()) gens.push_back(g.monic());
  Ideal out(I.nvars(), I.field(), std::move(gens));
  out.seed_groebner(I.groebner());
  return out;
}

}  // namespace

Ideal symbolic_power(const Arrangement& A, unsigned m, std::optional<std::uint64_t> budget) {
  if (m == 0) throw PreconditionError("symbolic_power: exponent must be positive");
  const auto flats = flats_of_codim(A, 2);
  if (flats.empty()) return Ideal::unit(A.nvars(), A.field());
  std::vector<Ideal> powers;
  for (const auto& X : flats) powers.emplace_back(A.nvars(), A.field(), prime_power_gens(X, A.nvars(), A.field(), m));
  return ideal_intersection(powers, budget);
}

bool in_symbolic_power(const MultiPoly& f, const Arrangement& A, unsigned m) {
  if (f.is_zero()) return true;
  for (const auto& X : flats_of_codim(A, 2)) {
    const CycMatrix T = essentialization_matrix(X, A.nvars(), A.field());
    const auto inverse = matrix_inverse(T, A.field());
    if (!inverse) throw std::logic_error("in_symbolic_power: singular coordinate change");
    const MultiPoly g = linear_substitution(f, *inverse);
    for (const auto& t : g.terms())
      if (t.mono.degree_in(0, 2) < m) return false;
  }
  return true;
}

Arrangement essential_part(const Arrangement& A) {
  const Flat center = center_flat(A);
  if (center.codim == A.nvars() || center.codim == 0) return A;
  return essentialize(A, center);
}

ContainmentReport check_containment(const Arrangement& input, unsigned m, unsigned r,
                                    std::optional<std::uint64_t> budget) {
  if (r == 0 || m < r) throw PreconditionError("check_containment: need m >= r >= 1");
  std::optional<BudgetScope> scope;
  if (budget) scope.emplace(*budget);
  ContainmentReport rep;
  rep.subject = input.source() ? input.source()->to_string() : "arrangement";
  rep.m = m;
  rep.r = r;
  Stopwatch sw;
  const Arrangement A = essential_part(input);
  try {
    const SingularLocus L = singular_ideal_definitional(A);
    if (L.empty_locus) {
      rep.verdict = Verdict::Holds;
      rep.detail = "empty singular locus";
      rep.seconds = sw.seconds();
      return rep;
    }
    const Ideal J = monic_basis_ideal(L.ideal);
    const Ideal Jr = ideal_power(J, r);
    rep.hashes["J"] = J.hash();
    rep.hashes["J^r"] = Jr.hash();

    auto fail_with = [&](const MultiPoly& w, std::string source) {
      rep.verdict = Verdict::Fails;
      rep.witness = w;
      rep.witness_source = std::move(source);
      rep.detail = "witness of degree " + std::to_string(w.degree()) + " in " + std::to_string(A.nvars()) +
                   " variables lies in J^(" + std::to_string(m) + ") and outside J^" + std::to_string(r);
      rep.seconds = sw.seconds();
      return rep;
    };

    const MultiPoly F = defining_polynomial(A).monic();
    if (in_symbolic_power(F, A, m) && !Jr.contains(F)) return fail_with(F, "defining polynomial");

    const Ideal S = symbolic_power(A, m);
    rep.hashes["J^(m)"] = S.hash();
    std::vector<MultiPoly> gens = S.groebner().elements();
    std::stable_sort(gens.begin(), gens.end(),
                     [](const MultiPoly& a, const MultiPoly& b) { return a.degree() < b.degree(); });
    for (const auto& g : gens) {
      if (Jr.contains(g)) continue;
      if (!in_symbolic_power(g, A, m))
        throw std::logic_error("symbolic power generator fails the vanishing-order test");
      return fail_with(g.monic(), "symbolic power generator");
    }
    rep.verdict = Verdict::Holds;
    rep.detail = std::to_string(gens.size()) + " generators of J^(" + std::to_string(m) + ") reduce to zero modulo J^" +
                 std::to_string(r);
  } catch (const BudgetExceeded& e) {
    rep.verdict = Verdict::BudgetExceeded;
    rep.detail = e.what();
  }
  rep.seconds = sw.seconds();
  return rep;
}

ContainmentReport check_containment(const ContainmentQuery& q) {
  if (q.strategy == Strategy::Reduce) return reduce_via_localization(q);
  ContainmentReport rep;
  if (q.spec) {
    rep = check_containment(build_arrangement(*q.spec), q.m, q.r, q.budget);
    rep.subject = q.spec->to_string();
  } else if (q.arrangement) {
    rep = check_containment(*q.arrangement, q.m, q.r, q.budget);
  } else {
    throw PreconditionError("check_containment: query names neither a group nor an arrangement");
  }
  rep.strategy = Strategy::Direct;
  return rep;
}

namespace {

struct MemoEntry {
  Verdict verdict;
  std::string note;
};

std::mutex memo_mutex;
std::map<std::string, MemoEntry> fixer_memo;

}  // namespace

void clear_fixer_memo() {
  std::lock_guard lock(memo_mutex);
  fixer_memo.clear();
}

ContainmentReport reduce_via_localization(const ContainmentQuery& q) {
  if (!q.spec || !q.spec->constructible()) throw PreconditionError("reduce: needs a constructible group");
  if (q.spec->rank() < 4) throw PreconditionError("reduce: rank must be at least 4, got " + q.spec->to_string());
  if (q.m != 3 || q.r != 2) throw PreconditionError("reduce: only (sym, pow) = (3, 2) is supported");
  const GroupSpec& spec = *q.spec;
  const std::uint64_t budget = q.budget.value_or(default_budget());

  ContainmentReport rep;
  rep.subject = spec.to_string();
  rep.m = q.m;
  rep.r = q.r;
  rep.strategy = Strategy::Reduce;
  Stopwatch sw;

  const Arrangement A = build_arrangement(spec);
  struct Pending {
    std::size_t trace_index;
    Flat flat;
    std::string key;
  };
  std::vector<Pending> pending;
  std::map<std::string, std::size_t> first_flat;  // key -> index into pending

  for (unsigned codim : {2u, 3u}) {
    for (const auto& X : flats_of_codim(A, codim)) {
      TraceEntry t;
      t.flat = incident_label(X);
      t.codim = codim;
      try {
        t.fixer = classify_fixer(spec, A, X).canonical().to_string();
      } catch (const UnclassifiableFixer& e) {
        t.verdict = Verdict::Abstain;
        t.note = e.what();
        rep.trace.push_back(std::move(t));
        continue;
      }
      if (codim == 2) {
        t.verdict = Verdict::Holds;
        t.note = "rank-2 fixer";
        rep.trace.push_back(std::move(t));
        continue;
      }
      const std::string key = t.fixer + "|3,2";
      pending.push_back({rep.trace.size(), X, key});
      first_flat.emplace(key, pending.size() - 1);
      rep.trace.push_back(std::move(t));
    }
  }

  std::vector<std::size_t> todo;
  {
    std::lock_guard lock(memo_mutex);
    for (const auto& [key, idx] : first_flat)
      if (!fixer_memo.count(key)) todo.push_back(idx);
  }
  std::map<std::string, MemoEntry> fresh;
  std::mutex fresh_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < todo.size(); k = next++) {
      const Pending& p = pending[todo[k]];
      const Arrangement local = essentialize(localize(A, p.flat), p.flat);
      const ContainmentReport sub = check_containment(local, q.m, q.r, budget);
      MemoEntry e{sub.verdict, sub.detail};
      if (sub.witness) e.note = "local witness " + sub.witness->to_string();
      std::lock_guard lock(fresh_mutex);
      fresh.emplace(p.key, std::move(e));
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(todo.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<std::string, MemoEntry> verdicts;
  {
    std::lock_guard lock(memo_mutex);
    for (const auto& [key, e] : fresh)
      if (e.verdict == Verdict::Holds || e.verdict == Verdict::Fails) fixer_memo.emplace(key, e);
    for (const auto& [key, idx] : first_flat) {
      (void)idx;
      if (auto it = fixer_memo.find(key); it != fixer_memo.end()) verdicts.emplace(key, it->second);
      else verdicts.emplace(key, fresh.at(key));
    }
  }

  bool fails = false, budget_hit = false, abstain = false;
  for (const auto& t : rep.trace)
    if (t.verdict == Verdict::Abstain) abstain = true;
  for (const auto& p : pending) {
    const MemoEntry& e = verdicts.at(p.key);
    TraceEntry& t = rep.trace[p.trace_index];
    t.verdict = e.verdict;
    if (first_flat.at(p.key) == static_cast<std::size_t>(&p - pending.data())) t.note = e.note;
    if (e.verdict == Verdict::Fails && !fails) {
      fails = true;
      rep.detail = "codimension-3 flat " + t.flat + " with fixer " + t.fixer + " fails";
    }
    if (e.verdict == Verdict::BudgetExceeded) budget_hit = true;
  }
  if (fails) rep.verdict = Verdict::Fails;
  else if (budget_hit) rep.verdict = Verdict::BudgetExceeded;
  else if (abstain) rep.verdict = Verdict::Abstain;
  else rep.verdict = Verdict::Holds;
  if (rep.verdict == Verdict::Holds)
    rep.detail = "all " + std::to_string(rep.trace.size()) + " flats of codimension 2 and 3 hold";
  rep.seconds = sw.seconds();
  return rep;
}

ContainmentReport product_containment(const std::vector<Verdict>& factor_verdicts, unsigned m, unsigned r) {
  ContainmentReport rep;
  rep.subject = "product";
  rep.m = m;
  rep.r = r;
  for (std::size_t i = 0; i < factor_verdicts.size(); ++i)
    rep.trace.push_back({"factor " + std::to_string(i), 0, "", factor_verdicts[i], ""});
  const bool any_fail = std::any_of(factor_verdicts.begin(), factor_verdicts.end(),
                                    [](Verdict v) { return v == Verdict::Fails; });
  const bool all_hold = std::all_of(factor_verdicts.begin(), factor_verdicts.end(),
                                    [](Verdict v) { return v == Verdict::Holds; });
  if (any_fail) {
    rep.verdict = Verdict::Fails;
    rep.detail = "a factor fails, so the product fails";
  } else if (all_hold && m == 2 * r - 1) {
    rep.verdict = Verdict::Holds;
    rep.detail = "every factor holds with m = 2r - 1";
  } else if (std::any_of(factor_verdicts.begin(), factor_verdicts.end(),
                         [](Verdict v) { return v == Verdict::BudgetExceeded; })) {
    rep.verdict = Verdict::BudgetExceeded;
    rep.detail = "a factor ran out of budget";
  } else {
    rep.verdict = Verdict::Abstain;
    rep.detail = all_hold ? "all factors hold but m != 2r - 1" : "some factor verdict is undecided";
  }
  return rep;
}

ContainmentReport product_containment(const std::vector<Arrangement>& factors, unsigned m, unsigned r,
                                      std::optional<std::uint64_t> budget) {
  Stopwatch sw;
  std::vector<Verdict> verdicts;
  std::vector<ContainmentReport> subs;
  for (const auto& A : factors) {
    subs.push_back(check_containment(A, m, r, budget));
    verdicts.push_back(subs.back().verdict);
  }
  ContainmentReport rep = product_containment(verdicts, m, r);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    rep.trace[i].fixer = subs[i].subject;
    rep.trace[i].note = subs[i].detail;
  }
  rep.seconds = sw.seconds();
  return rep;
}

}  // namespace reflectarr
