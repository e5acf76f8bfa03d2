#include "reflectarr/groebner.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "reflectarr/errors.hpp"
#include "reflectarr/linalg.hpp"

namespace reflectarr {

namespace {
thread_local std::optional<std::uint64_t> budget_override;
}

BudgetScope::BudgetScope(std::uint64_t steps) : previous_(budget_override) { budget_override = steps; }
BudgetScope::~BudgetScope() { budget_override = previous_; }

std::uint64_t default_budget() {
  if (budget_override) return *budget_override;
  static const std::uint64_t value = [] {
    if (const char* env = std::getenv("REFLECTARR_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return static_cast<std::uint64_t>(2'000'000'000ULL);
  }();
  return value;
}

namespace {

// ---------------------------------------------------------------- term kernels

using Terms = std::vector<Term>;

class StepBudget {
 public:
  explicit StepBudget(std::uint64_t limit) : limit_(limit) {}
  void step() {
    if (++used_ > limit_) throw BudgetExceeded(limit_);
  }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

std::uint64_t divmask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    unsigned e = m[i];
    if (e >= 1) mask |= 1ULL << (3 * i);
    if (e >= 2) mask |= 1ULL << (3 * i + 1);
    if (e >= 4) mask |= 1ULL << (3 * i + 2);
  }
  return mask;
}

struct Reducer {
  Monomial lm;
  std::uint64_t mask;
  const Terms* terms;  // monic, terms[0] is the leading term
  int sugar;
};

// acc - c * q * src[from..], with acc and src both descending.
Terms sub_scaled(Terms&& acc, std::size_t acc_from, const Terms& src, std::size_t src_from,
                 const Monomial& q, const Coeffs& c, const CyclotomicField& field,
                 const MonomialOrder& ord) {
  Terms out;
  out.reserve(acc.size() - acc_from + src.size() - src_from);
  const bool rational = field.degree() == 1;
  std::size_t i = acc_from, j = src_from;
  Monomial m;
  bool have_m = false;
  while (j < src.size()) {
    if (!have_m) {
      m = src[j].mono * q;
      have_m = true;
    }
    if (i < acc.size()) {
      int cmp = ord.compare(acc[i].mono, m);
      if (cmp > 0) {
        out.push_back(std::move(acc[i++]));
        continue;
      }
      if (cmp == 0) {
        Term& t = acc[i];
        if (rational) {
          t.coeff[0] -= c[0] * src[j].coeff[0];
        } else {
          Coeffs p = field.mul(c, src[j].coeff);
          for (std::size_t k = 0; k < p.size(); ++k) t.coeff[k] -= p[k];
        }
        if (!CyclotomicField::is_zero(t.coeff)) out.push_back(std::move(t));
        ++i;
        ++j;
        have_m = false;
        continue;
      }
    }
    Coeffs nc;
    if (rational) {
      nc.emplace_back(-(c[0] * src[j].coeff[0]));
    } else {
      nc = field.neg(field.mul(c, src[j].coeff));
    }
    out.push_back({m, std::move(nc)});
    ++j;
    have_m = false;
  }
  for (; i < acc.size(); ++i) out.push_back(std::move(acc[i]));
  return out;
}

const Reducer* find_reducer(const std::vector<Reducer>& reducers, const Monomial& m,
                            std::uint64_t mask) {
  for (const auto& r : reducers)
    if ((r.mask & ~mask) == 0 && r.lm.divides(m)) return &r;
  return nullptr;
}

unsigned weighted_degree(const Monomial& m, unsigned skip) { return m.degree() - m.degree_in(0, skip); }

// Full reduction of f. `sugar` is updated with the sugar of each reducer used.
Terms reduce_terms(Terms f, const std::vector<Reducer>& reducers, const CyclotomicField& field,
                   const MonomialOrder& ord, StepBudget& budget, int* sugar, unsigned skip) {
  Terms result;
  Terms cur = std::move(f);
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const Monomial& m = cur[pos].mono;
    const Reducer* r = reducers.empty() ? nullptr : find_reducer(reducers, m, divmask(m));
    if (!r) {
      result.push_back(std::move(cur[pos]));
      ++pos;
      continue;
    }
    budget.step();
    Monomial q = m / r->lm;
    if (sugar) *sugar = std::max(*sugar, r->sugar + static_cast<int>(weighted_degree(q, skip)));
    Coeffs c = std::move(cur[pos].coeff);
    cur = sub_scaled(std::move(cur), pos + 1, *r->terms, 1, q, c, field, ord);
    pos = 0;
  }
  return result;
}

Terms make_monic(Terms t, const CyclotomicField& field) {
  if (t.empty() || CyclotomicField::is_one(t[0].coeff)) return t;
  Coeffs inv = field.inv(t[0].coeff);
  for (auto& term : t) term.coeff = field.mul(term.coeff, inv);
  return t;
}

Terms to_terms(const MultiPoly& p) { return Terms(p.terms().begin(), p.terms().end()); }

// ---------------------------------------------------------------- Buchberger

class Engine {
 public:
  Engine(unsigned nvars, CyclotomicField field, MonomialOrder order, std::vector<MultiPoly> input)
      : nvars_(nvars), field_(std::move(field)), order_(order),
        skip_(order.kind() == MonomialOrder::Kind::BlockElimination ? order.block_size() : 0) {
    for (auto& p : input) {
      if (p.is_zero()) continue;
      MultiPoly q = p.with_order(order_);
      int s = 0;
      for (const auto& t : q.terms()) s = std::max(s, static_cast<int>(weighted_degree(t.mono, skip_)));
      inputs_.push_back({to_terms(q), s});
    }
    std::stable_sort(inputs_.begin(), inputs_.end(),
                     [](const Input& a, const Input& b) { return a.sugar < b.sugar; });
  }

  bool complete() const { return complete_; }

  // Processes every pending item of sugar <= bound (bound < 0: everything).
  void run(int bound, std::uint64_t limit, GroebnerStats& stats) {
    StepBudget budget(limit);
    try {
      while (!unit_) {
        int pair_index = select_pair();
        bool take_input = next_input_ < inputs_.size() &&
                          (pair_index < 0 || inputs_[next_input_].sugar <= pairs_[pair_index].sugar);
        int s = take_input ? inputs_[next_input_].sugar : (pair_index >= 0 ? pairs_[pair_index].sugar : -1);
        if (!take_input && pair_index < 0) break;
        if (bound >= 0 && s > bound) break;
        Terms h;
        int sugar = s;
        if (take_input) {
          h = reduce_terms(inputs_[next_input_].terms, reducers_, field_, order_, budget, &sugar, skip_);
          ++next_input_;
        } else {
          Pair p = pairs_[pair_index];
          Terms sp = spoly(p.i, p.j);
          h = reduce_terms(std::move(sp), reducers_, field_, order_, budget, &sugar, skip_);
          pairs_.erase(pairs_.begin() + pair_index);
          ++stats.pairs_processed;
        }
        if (!h.empty()) insert(make_monic(std::move(h), field_), sugar);
      }
    } catch (const BudgetExceeded&) {
      stats.reduction_steps += budget.used();
      throw;
    }
    stats.reduction_steps += budget.used();
    if (unit_ || (pairs_.empty() && next_input_ == inputs_.size())) complete_ = true;
  }

  GroebnerBasis snapshot(int bound) const {
    MultiPoly one_poly = MultiPoly::constant(nvars_, field_, Rational(1)).with_order(order_);
    if (unit_) return GroebnerBasis(order_, {one_poly}, complete_ ? -1 : bound);
    std::vector<std::size_t> act;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) act.push_back(i);
    std::sort(act.begin(), act.end(), [&](std::size_t a, std::size_t b) {
      return order_.compare(polys_[a][0].mono, polys_[b][0].mono) < 0;
    });
    std::vector<MultiPoly> out;
    StepBudget unlimited(UINT64_MAX);
    for (std::size_t k = 0; k < act.size(); ++k) {
      std::vector<Reducer> others;
      for (std::size_t l = 0; l < act.size(); ++l)
        if (l != k) others.push_back(reducers_for(act[l]));
      const Terms& g = polys_[act[k]];
      Terms tail(g.begin() + 1, g.end());
      Terms reduced = reduce_terms(std::move(tail), others, field_, order_, unlimited, nullptr, skip_);
      reduced.insert(reduced.begin(), g[0]);
      out.push_back(MultiPoly::from_sorted_terms(nvars_, field_, order_, std::move(reduced)));
    }
    return GroebnerBasis(order_, std::move(out), complete_ ? -1 : bound);
  }

 private:
  struct Input {
    Terms terms;
    int sugar;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
  };

  Reducer reducers_for(std::size_t i) const {
    return {polys_[i][0].mono, divmask(polys_[i][0].mono), &polys_[i], sugar_[i]};
  }

  int pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    int si = sugar_[i] + static_cast<int>(weighted_degree(l / polys_[i][0].mono, skip_));
    int sj = sugar_[j] + static_cast<int>(weighted_degree(l / polys_[j][0].mono, skip_));
    return std::max(si, sj);
  }

  int select_pair() const {
    int best = -1;
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (best < 0) {
        best = static_cast<int>(k);
        continue;
      }
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = static_cast<int>(k);
        continue;
      }
      int c = order_.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = static_cast<int>(k);
    }
    return best;
  }

  Terms spoly(std::size_t i, std::size_t j) const {
    const Terms& gi = polys_[i];
    const Terms& gj = polys_[j];
    Monomial l = lcm(gi[0].mono, gj[0].mono);
    Monomial qi = l / gi[0].mono;
    Monomial qj = l / gj[0].mono;
    Terms a;
    a.reserve(gi.size());
    for (std::size_t k = 1; k < gi.size(); ++k) a.push_back({gi[k].mono * qi, gi[k].coeff});
    return sub_scaled(std::move(a), 0, gj, 1, qj, field_.one(), field_, order_);
  }

  void insert(Terms h, int sugar) {
    if (h[0].mono.degree() == 0) {
      unit_ = true;
      pairs_.clear();
      return;
    }
    const std::size_t n = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    const Monomial& lh = polys_[n][0].mono;

    // Gebauer-Moeller: new pairs.
    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < n; ++i)
      if (active_[i]) {
        const Monomial& li = polys_[i][0].mono;
        cands.push_back({i, lcm(li, lh), li.coprime(lh)});
      }
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) {
        kept.push_back(cands[a]);
        continue;
      }
      bool redundant = false;
      for (std::size_t b = a + 1; b < cands.size() && !redundant; ++b)
        if (cands[b].lcm.divides(cands[a].lcm)) redundant = true;
      for (std::size_t b = 0; b < kept.size() && !redundant; ++b)
        if (kept[b].lcm.divides(cands[a].lcm)) redundant = true;
      if (!redundant) kept.push_back(cands[a]);
    }
    // Old pairs made redundant by the new element.
    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size());
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lcm(polys_[p.i][0].mono, lh) == p.lcm) &&
                  !(lcm(polys_[p.j][0].mono, lh) == p.lcm);
      if (!drop) survivors.push_back(std::move(p));
    }
    pairs_ = std::move(survivors);
    for (const auto& c : kept) {
      if (c.coprime) continue;
      pairs_.push_back({c.i, n, c.lcm, pair_sugar(c.i, n, c.lcm)});
    }
    for (std::size_t i = 0; i < n; ++i)
      if (active_[i] && lh.divides(polys_[i][0].mono)) active_[i] = false;
    reducers_.clear();
    for (std::size_t i = 0; i <= n; ++i)
      if (active_[i]) reducers_.push_back(reducers_for(i));
  }

  unsigned nvars_;
  CyclotomicField field_;
  MonomialOrder order_;
  unsigned skip_;
  std::vector<Input> inputs_;
  std::size_t next_input_ = 0;
  std::vector<Terms> polys_;
  std::vector<int> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::vector<Reducer> reducers_;
  bool unit_ = false;
  bool complete_ = false;
};

}  // namespace

// ---------------------------------------------------------------- GroebnerBasis

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::vector<MultiPoly> elements, int degree_bound)
    : order_(order), elements_(std::move(elements)), degree_bound_(degree_bound) {}

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
}

MultiPoly GroebnerBasis::reduce(const MultiPoly& f) const {
  MultiPoly g = f.with_order(order_);
  if (g.is_zero()) return g;
  std::vector<Reducer> reducers;
  std::vector<Terms> store;
  store.reserve(elements_.size());
  for (const auto& e : elements_) {
    if (e.is_zero()) continue;
    store.push_back(to_terms(e.monic()));
  }
  for (const auto& t : store) reducers.push_back({t[0].mono, divmask(t[0].mono), &t, 0});
  StepBudget unlimited(UINT64_MAX);
  Terms r = reduce_terms(to_terms(g), reducers, g.field(), order_, unlimited, nullptr, 0);
  return MultiPoly::from_sorted_terms(g.nvars(), g.field(), order_, std::move(r));
}

// ---------------------------------------------------------------- Ideal

struct Ideal::Cache {
  std::mutex mutex;
  std::map<std::string, std::unique_ptr<Engine>> engines;
  std::map<std::string, GroebnerBasis> complete;
  std::optional<GroebnerBasis> truncated;  // grevlex, largest bound so far
  GroebnerStats stats;
};

Ideal::Ideal(unsigned nvars, CyclotomicField field, std::vector<MultiPoly> gens)
    : nvars_(nvars), field_(std::move(field)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.nvars() != nvars_) throw std::invalid_argument("ideal generators with mismatched nvars");
    if (!(g.field() == field_)) throw std::invalid_argument("ideal generators with mismatched fields");
    if (!g.is_zero()) gens_.push_back(g.with_order(MonomialOrder::grevlex()));
  }
}

Ideal::Ideal(std::vector<MultiPoly> gens)
    : Ideal(gens.empty() ? throw std::invalid_argument("Ideal: empty generator list needs a ring")
                         : gens[0].nvars(),
            gens[0].field(), gens) {}

Ideal Ideal::unit(unsigned nvars, const CyclotomicField& field) {
  return Ideal(nvars, field, {MultiPoly::constant(nvars, field, Rational(1))});
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const MultiPoly& g) { return g.is_homogeneous(); });
}

bool Ideal::is_zero() const { return gens_.empty(); }

const GroebnerBasis& Ideal::groebner(MonomialOrder order, std::optional<std::uint64_t> budget) const {
  std::lock_guard lock(cache_->mutex);
  const std::string key = order.name();
  if (auto it = cache_->complete.find(key); it != cache_->complete.end()) return it->second;
  auto& engine = cache_->engines[key];
  if (!engine) engine = std::make_unique<Engine>(nvars_, field_, order, gens_);
  engine->run(-1, budget.value_or(default_budget()), cache_->stats);
  auto [it, _] = cache_->complete.emplace(key, engine->snapshot(-1));
  engine.reset();
  return it->second;
}

GroebnerBasis Ideal::truncated_groebner(int degree, std::optional<std::uint64_t> budget) const {
  if (!is_homogeneous()) throw std::invalid_argument("truncated_groebner: ideal not homogeneous");
  std::lock_guard lock(cache_->mutex);
  const std::string key = MonomialOrder::grevlex().name();
  if (auto it = cache_->complete.find(key); it != cache_->complete.end()) return it->second;
  if (cache_->truncated && cache_->truncated->degree_bound() >= degree) return *cache_->truncated;
  auto& engine = cache_->engines[key];
  if (!engine) engine = std::make_unique<Engine>(nvars_, field_, MonomialOrder::grevlex(), gens_);
  engine->run(degree, budget.value_or(default_budget()), cache_->stats);
  GroebnerBasis gb = engine->snapshot(degree);
  if (gb.complete()) {
    cache_->complete.emplace(key, gb);
    engine.reset();
    cache_->truncated.reset();
  } else {
    cache_->truncated = gb;
  }
  return gb;
}

bool Ideal::contains(const MultiPoly& f, std::optional<std::uint64_t> budget) const {
  if (f.is_zero()) return true;
  if (gens_.empty()) return false;
  if (!is_homogeneous()) return groebner(MonomialOrder::grevlex(), budget).reduce(f).is_zero();
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : f.terms()) parts[static_cast<int>(t.mono.degree())].push_back(t);
  GroebnerBasis gb = truncated_groebner(f.degree(), budget);
  for (auto& [d, terms] : parts) {
    MultiPoly part = MultiPoly::from_terms(f.nvars(), f.field(), f.order(), std::move(terms));
    if (!gb.reduce(part).is_zero()) return false;
  }
  return true;
}

void Ideal::seed_groebner(const GroebnerBasis& gb) const {
  if (!gb.complete()) throw std::invalid_argument("seed_groebner: basis is truncated");
  std::lock_guard lock(cache_->mutex);
  cache_->complete.insert_or_assign(gb.order().name(), gb);
}

GroebnerStats Ideal::stats() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->stats;
}

std::string Ideal::serialize() const {
  std::ostringstream out;
  out << "ideal nvars=" << nvars_ << " conductor=" << field_.conductor() << " order=grevlex\n";
  for (const auto& g : gens_) out << g.to_string() << '\n';
  return out.str();
}

Ideal Ideal::deserialize(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty ideal document", 1);
  unsigned nvars = 0, conductor = 0;
  char order[64] = {0};
  if (std::sscanf(header.c_str(), "ideal nvars=%u conductor=%u order=%63s", &nvars, &conductor, order) != 3)
    throw ParseError("bad ideal header '" + header + "'", 1);
  if (conductor == 0) throw ParseError("conductor must be positive", 1);
  MonomialOrder ord = MonomialOrder::parse(order);
  CyclotomicField field(conductor);
  std::vector<MultiPoly> gens;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      gens.push_back(MultiPoly::parse(line, nvars, field, ord));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return Ideal(nvars, field, std::move(gens));
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string Ideal::hash() const { return fnv1a_hex(serialize()); }

// ---------------------------------------------------------------- operations

GroebnerBasis groebner_basis(const Ideal& I, MonomialOrder order) { return I.groebner(order); }

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& G) { return G.reduce(f); }

namespace {
void require_same_ring(const Ideal& I, const Ideal& J) {
  if (I.nvars() != J.nvars() || !(I.field() == J.field()))
    throw std::invalid_argument("ideals live in different rings");
}
}  // namespace

bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  if (I.is_zero() || J.is_zero()) return I.is_zero() == J.is_zero();
  const auto& a = I.groebner().elements();
  const auto& b = J.groebner().elements();
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

bool ideal_contained(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  for (const auto& g : I.gens())
    if (!J.contains(g)) return false;
  return true;
}

Ideal ideal_power(const Ideal& I, unsigned r) {
  if (r == 0) return Ideal::unit(I.nvars(), I.field());
  const auto& g = I.gens();
  std::vector<MultiPoly> out;
  // Multisets of size r, indices non-decreasing.
  std::vector<std::size_t> idx(r, 0);
  if (g.empty()) return I;
  while (true) {
    MultiPoly p = g[idx[0]];
    for (unsigned k = 1; k < r; ++k) p = p * g[idx[k]];
    out.push_back(std::move(p));
    int k = static_cast<int>(r) - 1;
    while (k >= 0 && idx[k] == g.size() - 1) --k;
    if (k < 0) break;
    ++idx[k];
    for (unsigned l = k + 1; l < r; ++l) idx[l] = idx[k];
  }
  return Ideal(I.nvars(), I.field(), std::move(out));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::vector<MultiPoly> out;
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) out.push_back(a * b);
  return Ideal(I.nvars(), I.field(), std::move(out));
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::vector<MultiPoly> out = I.gens();
  out.insert(out.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.nvars(), I.field(), std::move(out));
}

Ideal ideal_scaled(const Ideal& I, const MultiPoly& f) {
  std::vector<MultiPoly> out;
  for (const auto& g : I.gens()) out.push_back(g * f);
  return Ideal(I.nvars(), I.field(), std::move(out));
}

Ideal intersect_pair(const Ideal& I, const Ideal& J, std::optional<std::uint64_t> budget) {
  require_same_ring(I, J);
  if (I.is_zero() || J.is_zero()) return Ideal(I.nvars(), I.field(), {});
  const unsigned n = I.nvars();
  if (n + 1 > kMaxVars) throw std::invalid_argument("intersection needs an auxiliary variable slot");
  const CyclotomicField& F = I.field();
  const MonomialOrder ord = MonomialOrder::block(1);
  MultiPoly t = MultiPoly::variable(n + 1, F, 0).with_order(ord);
  MultiPoly one_minus_t = MultiPoly::constant(n + 1, F, Rational(1)).with_order(ord) - t;
  std::vector<MultiPoly> gens;
  for (const auto& g : I.gens()) gens.push_back(t * g.shifted(n + 1, 1).with_order(ord));
  for (const auto& h : J.gens()) gens.push_back(one_minus_t * h.shifted(n + 1, 1).with_order(ord));
  Ideal aux(n + 1, F, std::move(gens));
  const GroebnerBasis& gb = aux.groebner(ord, budget);
  std::vector<MultiPoly> out;
  for (const auto& e : gb.elements())
    if (!e.involves_leading_vars(1)) out.push_back(e.drop_leading_vars(1));
  Ideal result(n, F, out);
  result.seed_groebner(GroebnerBasis(MonomialOrder::grevlex(), std::move(out), -1));
  return result;
}

Ideal ideal_intersection(const std::vector<Ideal>& ideals, std::optional<std::uint64_t> budget) {
  if (ideals.empty()) throw std::invalid_argument("ideal_intersection: empty list");
  Ideal acc = ideals[0];
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = intersect_pair(acc, ideals[k], budget);
  return acc;
}

bool radical_member(const MultiPoly& f, const Ideal& I, std::optional<std::uint64_t> budget) {
  if (f.nvars() != I.nvars() || !(f.field() == I.field()))
    throw std::invalid_argument("radical_member: ring mismatch");
  if (f.is_zero()) return true;
  if (I.contains(f, budget)) return true;
  const unsigned n = I.nvars();
  if (n + 1 > kMaxVars) throw std::invalid_argument("radical membership needs an auxiliary variable slot");
  std::vector<MultiPoly> gens;
  for (const auto& g : I.gens()) gens.push_back(g.shifted(n + 1, 0));
  MultiPoly y = MultiPoly::variable(n + 1, I.field(), n);
  gens.push_back(MultiPoly::constant(n + 1, I.field(), Rational(1)) - y * f.shifted(n + 1, 0));
  Ideal aux(n + 1, I.field(), std::move(gens));
  return aux.groebner(MonomialOrder::grevlex(), budget).is_unit();
}

bool radical_equal(const Ideal& I, const Ideal& J) {
  for (const auto& g : I.gens())
    if (!radical_member(g, J)) return false;
  for (const auto& g : J.gens())
    if (!radical_member(g, I)) return false;
  return true;
}

// ---------------------------------------------------------------- Hilbert series

namespace {

using Series = std::vector<BigInt>;

Series series_mul(const Series& a, const Series& b) {
  Series out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void series_add_shifted(Series& acc, const Series& b, unsigned shift) {
  if (acc.size() < b.size() + shift) acc.resize(b.size() + shift, BigInt(0));
  for (std::size_t i = 0; i < b.size(); ++i) acc[i + shift] += b[i];
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

Series numerator_rec(std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return {BigInt(1)};
  bool coprime = true;
  for (std::size_t a = 0; a < gens.size() && coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
      if (!gens[a].coprime(gens[b])) coprime = false;
  if (coprime) {
    Series s{BigInt(1)};
    for (const auto& g : gens) {
      Series f(g.degree() + 1, BigInt(0));
      f[0] = 1;
      f[g.degree()] -= 1;
      s = series_mul(s, f);
    }
    return s;
  }
  // Pivot on the variable occurring in most mixed generators, at the median exponent.
  auto mixed = [](const Monomial& g) { return g.support_end() > 0 && g.degree_in(0, kMaxVars) != g[g.support_end() - 1]; };
  unsigned best = 0, best_count = 0;
  for (unsigned v = 0; v < kMaxVars; ++v) {
    unsigned count = 0;
    for (const auto& g : gens)
      if (mixed(g) && g[v] > 0) ++count;
    if (count > best_count) {
      best = v;
      best_count = count;
    }
  }
  std::vector<unsigned> exps;
  for (const auto& g : gens)
    if (mixed(g) && g[best] > 0) exps.push_back(g[best]);
  std::sort(exps.begin(), exps.end());
  unsigned e = exps[exps.size() / 2];
  Monomial p = Monomial::variable(best, e);

  std::vector<Monomial> with_p = gens;
  with_p.push_back(p);
  std::vector<Monomial> quotient;
  for (const auto& g : gens) {
    Monomial q = g;
    q.set(best, g[best] > e ? g[best] - e : 0);
    quotient.push_back(q);
  }
  Series s = numerator_rec(std::move(with_p));
  series_add_shifted(s, numerator_rec(std::move(quotient)), e);
  while (s.size() > 1 && s.back() == 0) s.pop_back();
  return s;
}

}  // namespace

std::vector<BigInt> hilbert_numerator(std::vector<Monomial> gens) { return numerator_rec(std::move(gens)); }

HilbertData hilbert_multiplicity(const Ideal& I) {
  if (!I.is_homogeneous()) throw std::invalid_argument("hilbert_multiplicity: ideal not homogeneous");
  std::vector<Monomial> leads;
  for (const auto& g : I.groebner().elements()) leads.push_back(g.leading_monomial());
  Series num = hilbert_numerator(leads);
  unsigned dim = I.nvars();
  // Divide by (1 - t) while t = 1 is a root.
  auto value_at_one = [](const Series& s) {
    BigInt v = 0;
    for (const auto& c : s) v += c;
    return v;
  };
  while (dim > 0 && value_at_one(num) == 0 && !(num.size() == 1 && num[0] == 0)) {
    Series q(num.size() - 1, BigInt(0));
    BigInt carry = 0;
    for (std::size_t k = 0; k + 1 < num.size(); ++k) {
      carry += num[k];
      q[k] = carry;
    }
    num = q.empty() ? Series{BigInt(0)} : q;
    --dim;
  }
  HilbertData out;
  out.dimension = dim;
  out.numerator = num;
  out.multiplicity = value_at_one(num);
  return out;
}

std::size_t minimal_generator_count(const Ideal& I) {
  if (!I.is_homogeneous()) throw std::invalid_argument("minimal_generator_count: ideal not homogeneous");
  std::map<int, std::vector<MultiPoly>> by_degree;
  for (const auto& g : I.gens()) by_degree[g.degree()].push_back(g);
  std::vector<MultiPoly> kept;
  for (auto& [d, group] : by_degree) {
    std::vector<MultiPoly> remainders;
    if (kept.empty()) {
      remainders = group;
    } else {
      Ideal lower(I.nvars(), I.field(), kept);
      GroebnerBasis gb = lower.truncated_groebner(d);
      for (const auto& g : group) remainders.push_back(gb.reduce(g));
    }
    // Linear rank of the remainders over the monomials that occur.
    std::map<std::string, std::size_t> column;
    std::vector<Monomial> monos;
    for (const auto& r : remainders)
      for (const auto& t : r.terms()) {
        std::ostringstream key;
        for (unsigned v = 0; v < I.nvars(); ++v) key << t.mono[v] << ',';
        if (column.emplace(key.str(), column.size()).second) monos.push_back(t.mono);
      }
    CycMatrix rows;
    for (const auto& r : remainders) {
      CycVector row(column.size(), CyclotomicNumber(I.field()));
      for (const auto& t : r.terms()) {
        std::ostringstream key;
        for (unsigned v = 0; v < I.nvars(); ++v) key << t.mono[v] << ',';
        row[column[key.str()]] = CyclotomicNumber(I.field(), t.coeff);
      }
      rows.push_back(std::move(row));
    }
    RowEchelon e = row_reduce(rows, I.field(), column.size());
    // Keep the generators that realise the new rank, in input order.
    CycMatrix chosen;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < rows.size() && rank < e.rank(); ++k) {
      chosen.push_back(rows[k]);
      std::size_t r = matrix_rank(chosen, I.field(), column.size());
      if (r > rank) {
        rank = r;
        kept.push_back(group[k]);
      } else {
        chosen.pop_back();
      }
    }
  }
  return kept.size();
}

int alpha(const Ideal& I) {
  if (I.is_zero()) throw std::invalid_argument("alpha of the zero ideal");
  if (!I.is_homogeneous()) throw std::invalid_argument("alpha: ideal not homogeneous");
  int best = INT_MAX;
  for (const auto& g : I.groebner().elements()) best = std::min(best, g.degree());
  return best;
}

std::vector<std::vector<MultiPoly>> linear_syzygies(const std::vector<MultiPoly>& gens) {
  if (gens.empty()) return {};
  const unsigned n = gens[0].nvars();
  const CyclotomicField& F = gens[0].field();
  const std::size_t k = gens.size();
  // Unknown (g, v): coefficient of x_v in a_g. Equation per product monomial.
  std::map<std::string, std::size_t> eq_index;
  std::vector<std::vector<std::pair<std::size_t, Coeffs>>> eqs;
  for (std::size_t g = 0; g < k; ++g)
    for (unsigned v = 0; v < n; ++v)
      for (const auto& t : gens[g].terms()) {
        Monomial m = t.mono * Monomial::variable(v);
        std::ostringstream key;
        for (unsigned i = 0; i < n; ++i) key << m[i] << ',';
        auto [it, fresh] = eq_index.emplace(key.str(), eqs.size());
        if (fresh) eqs.emplace_back();
        eqs[it->second].push_back({g * n + v, t.coeff});
      }
  CycMatrix m(eqs.size(), CycVector(k * n, CyclotomicNumber(F)));
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (const auto& [col, c] : eqs[r]) m[r][col] = m[r][col] + CyclotomicNumber(F, c);
  CycMatrix basis = nullspace(m, F, k * n);
  std::vector<std::vector<MultiPoly>> out;
  for (const auto& vec : basis) {
    std::vector<MultiPoly> syz;
    for (std::size_t g = 0; g < k; ++g) {
      CycVector coeffs(vec.begin() + g * n, vec.begin() + (g + 1) * n);
      syz.push_back(MultiPoly::linear_form(coeffs));
    }
    out.push_back(std::move(syz));
  }
  return out;
}

}  // namespace reflectarr
