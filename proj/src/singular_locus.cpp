#include "reflectarr/singular_locus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "reflectarr/errors.hpp"

namespace reflectarr {

nlohmann::json to_json(const CheckResult& c, bool with_timings) {
  nlohmann::json j;
  j["name"] = c.name;
  j["verdict"] = c.verdict;
  if (with_timings) j["seconds"] = c.seconds;
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.hashes.empty()) j["hashes"] = c.hashes;
  return j;
}

std::string combine_verdicts(const std::vector<CheckResult>& checks) {
  bool failed = false;
  for (const auto& c : checks) {
    if (c.verdict == "budget-exceeded") return "budget-exceeded";
    if (c.verdict == "fail") failed = true;
  }
  return failed ? "fail" : "pass";
}

SingularLocus singular_ideal_definitional(const Arrangement& A, std::optional<std::uint64_t> budget) {
  const auto flats = flats_of_codim(A, 2);
  if (flats.empty()) return {Ideal::unit(A.nvars(), A.field()), true, 0};
  std::vector<Ideal> primes;
  primes.reserve(flats.size());
  for (const auto& X : flats) primes.emplace_back(A.nvars(), A.field(), X.forms(A.nvars(), A.field()));
  return {ideal_intersection(primes, budget), false, flats.size()};
}

namespace {

using Kind = GroupSpec::Kind;

bool is_family(const GroupSpec& spec) {
  return spec.kind() == Kind::Symmetric || spec.kind() == Kind::Monomial ||
         spec.kind() == Kind::FullMonomial;
}

void require_family_rank3(const GroupSpec& spec, const char* what) {
  if (!is_family(spec))
    throw PreconditionError(std::string(what) + ": needs A_n, G(m,m,n) or G(m,1,n), got " + spec.to_string());
  if (spec.rank() < 3)
    throw PreconditionError(std::string(what) + ": rank must be at least 3, got " + spec.to_string());
}

MultiPoly var(unsigned n, const CyclotomicField& F, unsigned i) { return MultiPoly::variable(n, F, i); }

MultiPoly one(unsigned n, const CyclotomicField& F) { return MultiPoly::constant(n, F, Rational(1)); }

std::int64_t choose2(std::int64_t a) { return a * (a - 1) / 2; }

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void collect_leaves(const GroupSpec& spec, std::vector<GroupSpec>& out) {
  if (spec.kind() == Kind::Product) {
    for (const auto& f : spec.factors()) collect_leaves(f, out);
  } else {
    out.push_back(spec);
  }
}

std::vector<MultiPoly> monic_all(std::vector<MultiPoly> v) {
  for (auto& p : v) p = p.monic();
  return v;
}

/// All minors of size n-1 of a square n x n matrix.
std::vector<MultiPoly> submaximal_minors(const PolyMatrix& m) {
  std::vector<MultiPoly> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    PolyMatrix without = m.without_row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      MultiPoly d = determinant(without.without_col(c));
      if (!d.is_zero()) out.push_back(d);
    }
  }
  return out;
}

template <typename Fn>
CheckResult run_check(std::string name, Fn&& body) {
  CheckResult c;
  c.name = std::move(name);
  Stopwatch sw;
  try {
    body(c);
  } catch (const BudgetExceeded& e) {
    c.verdict = "budget-exceeded";
    c.detail = e.what();
  }
  c.seconds = sw.seconds();
  return c;
}

}  // namespace

Ideal explicit_generators(const GroupSpec& spec) {
  require_family_rank3(spec, "explicit_generators");
  const unsigned n = spec.nvars();
  const CyclotomicField F(spec.conductor());
  const unsigned m = spec.kind() == Kind::Symmetric ? 1 : spec.m();
  std::vector<MultiPoly> gens;
  for (unsigned s = 0; s < n; ++s) {
    MultiPoly g = one(n, F);
    for (unsigned i = 0; i < n; ++i) {
      if (i == s) continue;
      for (unsigned j = i + 1; j < n; ++j) {
        if (j == s) continue;
        g = g * (var(n, F, i).pow(m) - var(n, F, j).pow(m));
      }
    }
    if (spec.kind() == Kind::Monomial) g = g * var(n, F, s);
    if (spec.kind() == Kind::FullMonomial)
      for (unsigned i = 0; i < n; ++i)
        if (i != s) g = g * var(n, F, i);
    gens.push_back(g.monic());
  }
  return Ideal(n, F, std::move(gens));
}

InvariantSet basic_invariants(const GroupSpec& spec) {
  if (!is_family(spec)) throw PreconditionError("basic_invariants: unsupported spec " + spec.to_string());
  const unsigned n = spec.nvars();
  const CyclotomicField F(spec.conductor());
  auto power_sum = [&](unsigned d) {
    MultiPoly p(n, F);
    for (unsigned i = 0; i < n; ++i) p = p + var(n, F, i).pow(d);
    return p;
  };
  MultiPoly all_vars = one(n, F);
  for (unsigned i = 0; i < n; ++i) all_vars = all_vars * var(n, F, i);

  std::vector<MultiPoly> polys;
  switch (spec.kind()) {
    case Kind::Symmetric:
      for (unsigned d = 1; d <= n; ++d) polys.push_back(power_sum(d));
      break;
    case Kind::Monomial:
      polys.push_back(all_vars);
      for (unsigned d = 1; d < n; ++d) polys.push_back(power_sum(spec.m() * d));
      break;
    default:
      for (unsigned d = 1; d < n; ++d) polys.push_back(power_sum(spec.m() * d));
      polys.push_back(all_vars.pow(spec.m()));
      break;
  }
  std::stable_sort(polys.begin(), polys.end(),
                   [](const MultiPoly& a, const MultiPoly& b) { return a.degree() < b.degree(); });
  return {spec, std::move(polys)};
}

PolyMatrix jacobian_matrix(const InvariantSet& inv, unsigned how_many) {
  if (how_many == 0 || how_many > inv.polys.size())
    throw PreconditionError("jacobian_matrix: column count out of range");
  const unsigned n = inv.polys.front().nvars();
  std::vector<std::vector<MultiPoly>> rows(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < how_many; ++j) rows[i].push_back(inv.polys[j].derivative(i));
  return PolyMatrix(std::move(rows));
}

PolyMatrix derivation_matrix(const GroupSpec& spec, unsigned how_many) {
  if (spec.kind() != Kind::FullMonomial)
    throw PreconditionError("derivation_matrix: only G(m,1,n) is supported, got " + spec.to_string());
  const unsigned n = spec.nvars();
  if (how_many == 0 || how_many > n) throw PreconditionError("derivation_matrix: column count out of range");
  const CyclotomicField F(spec.conductor());
  std::vector<std::vector<MultiPoly>> rows(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < how_many; ++j) rows[i].push_back(var(n, F, i).pow(j * spec.m() + 1));
  return PolyMatrix(std::move(rows));
}

std::int64_t hilbert_burch_multiplicity(const std::vector<int>& degrees) {
  if (degrees.empty()) throw PreconditionError("hilbert_burch_multiplicity: no degrees");
  std::int64_t s = 0;
  for (int e : degrees) {
    if (e <= 0) throw PreconditionError("hilbert_burch_multiplicity: degrees must be positive");
    s += e;
  }
  std::int64_t total = 0;
  for (int e : degrees) total += choose2(s + e);
  return total - static_cast<std::int64_t>(degrees.size() + 1) * choose2(s);
}

std::int64_t codim2_flat_formula(const GroupSpec& spec) {
  const std::int64_t N = spec.size();
  const std::int64_t m = spec.m();
  switch (spec.kind()) {
    case Kind::Symmetric: return 3 * binom(N, 4) + binom(N, 3);
    case Kind::Monomial: return m * m * (binom(N, 3) + 3 * binom(N, 4)) + binom(N, 2);
    case Kind::FullMonomial:
      return binom(N, 2) + m * N * binom(N - 1, 2) + 3 * m * m * binom(N, 4) + m * m * binom(N, 3);
    case Kind::Product: {
      std::vector<GroupSpec> leaves;
      collect_leaves(spec, leaves);
      std::int64_t total = 0;
      std::vector<std::int64_t> sizes;
      for (const auto& f : leaves) {
        total += codim2_flat_formula(f);
        sizes.push_back(static_cast<std::int64_t>(build_arrangement(f).size()));
      }
      for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t j = i + 1; j < sizes.size(); ++j) total += sizes[i] * sizes[j];
      return total;
    }
    case Kind::Sporadic: return spec.record().codim2_flat_count;
  }
  return 0;
}

Ideal product_singular_ideal(const std::vector<ProductFactor>& factors) {
  if (factors.empty()) throw PreconditionError("product_singular_ideal: no factors");
  const unsigned n = factors.front().F.nvars();
  const CyclotomicField& field = factors.front().F.field();
  std::vector<MultiPoly> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    MultiPoly scale = one(n, field);
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (j != i) scale = scale * factors[j].F;
    for (const auto& g : factors[i].J.gens()) gens.push_back((scale * g).monic());
  }
  return Ideal(n, field, std::move(gens));
}

Ideal product_singular_ideal(const Ideal& J1, const MultiPoly& F1, const Ideal& J2, const MultiPoly& F2) {
  return product_singular_ideal(std::vector<ProductFactor>{{J1, F1}, {J2, F2}});
}

std::vector<ProductFactor> product_factors(const GroupSpec& spec) {
  std::vector<GroupSpec> leaves;
  collect_leaves(spec, leaves);
  const unsigned total = spec.nvars();
  const CyclotomicField field(spec.conductor());
  std::vector<ProductFactor> out;
  unsigned offset = 0;
  for (const auto& leaf : leaves) {
    Arrangement A = build_arrangement(leaf, field);
    SingularLocus L = singular_ideal_definitional(A);
    MultiPoly F = defining_polynomial(A).shifted(total, offset);
    std::vector<MultiPoly> gens;
    for (const auto& g : L.ideal.gens()) gens.push_back(g.shifted(total, offset));
    out.push_back({Ideal(total, field, std::move(gens)), F});
    offset += leaf.nvars();
  }
  return out;
}

MultiPoly jacobian_determinant_target(const Arrangement& A) {
  MultiPoly p = one(A.nvars(), A.field());
  for (std::size_t i = 0; i < A.size(); ++i)
    p = p * A.form(i).pow(A.hyperplanes()[i].reflection_order - 1);
  return p;
}

nlohmann::json EqJReport::to_json(bool with_timings) const {
  nlohmann::json j;
  j["schema"] = kReportSchemaVersion;
  j["group"] = spec.to_string();
  j["verdict"] = verdict();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back(reflectarr::to_json(c, with_timings));
  return j;
}

EqJReport verify_theorem_eqJ(const GroupSpec& spec, std::optional<std::uint64_t> budget) {
  require_family_rank3(spec, "verify_theorem_eqJ");
  std::optional<BudgetScope> scope;
  if (budget) scope.emplace(*budget);

  EqJReport report{spec, {}};
  const Arrangement A = build_arrangement(spec);
  const unsigned n = spec.nvars();
  const unsigned lowest = n - 1;
  std::optional<Ideal> J;

  report.checks.push_back(run_check("definitional-multiplicity", [&](CheckResult& c) {
    SingularLocus L = singular_ideal_definitional(A);
    J = Ideal(n, A.field(), monic_all(L.ideal.groebner().elements()));
    const BigInt e = hilbert_multiplicity(*J).multiplicity;
    const std::int64_t formula = codim2_flat_formula(spec);
    c.verdict = (e == BigInt(static_cast<long>(L.flat_count)) && e == BigInt(static_cast<long>(formula))) ? "pass" : "fail";
    c.detail = "multiplicity " + e.get_str() + ", flats " + std::to_string(L.flat_count) + ", formula " +
               std::to_string(formula);
    c.hashes["definitional"] = J->hash();
  }));
  if (!J) return report;

  auto compare = [&](const std::string& name, const std::string& label, const std::vector<MultiPoly>& gens) {
    report.checks.push_back(run_check(name, [&](CheckResult& c) {
      Ideal I(n, A.field(), monic_all(gens));
      const bool eq = ideal_equal(I, *J);
      c.verdict = eq ? "pass" : "fail";
      c.detail = eq ? "equal" : (ideal_contained(I, *J) ? "strictly contained" : "not contained");
      c.hashes[label] = I.hash();
    }));
  };

  const Ideal explicit_J = explicit_generators(spec);
  compare("explicit-equals-definitional", "explicit", explicit_J.gens());

  const InvariantSet inv = basic_invariants(spec);
  const auto jac_minors = maximal_minors(jacobian_matrix(inv, lowest));
  const bool higher_order_reflections = spec.kind() == Kind::FullMonomial && spec.m() > 2;
  if (!higher_order_reflections) {
    compare("jacobian-minors-equal-definitional", "jacobian", jac_minors);
  } else {
    report.checks.push_back(run_check("jacobian-minors-strictly-inside", [&](CheckResult& c) {
      Ideal I(n, A.field(), monic_all(jac_minors));
      const bool inside = ideal_contained(I, *J);
      const bool eq = inside && ideal_equal(I, *J);
      c.verdict = inside && !eq ? "pass" : "fail";
      c.detail = eq ? "equal" : (inside ? "strictly contained" : "not contained");
      c.hashes["jacobian"] = I.hash();
    }));
  }

  report.checks.push_back(run_check("full-jacobian-minors-radical-equal", [&](CheckResult& c) {
    const auto full = submaximal_minors(jacobian_matrix(inv, static_cast<unsigned>(inv.polys.size())));
    Ideal I(n, A.field(), monic_all(full));
    const bool inside = ideal_contained(I, *J);
    bool radical = inside;
    for (std::size_t k = 0; radical && k < J->gens().size(); ++k) radical = radical_member(J->gens()[k], I);
    c.verdict = inside && radical ? "pass" : "fail";
    c.detail = std::string(inside ? "minors in J" : "a minor lies outside J") +
               (radical ? ", J in radical" : ", J not in radical");
    c.hashes["full-jacobian"] = I.hash();
  }));

  if (spec.kind() == Kind::FullMonomial)
    compare("derivation-minors-equal-definitional", "derivation",
            maximal_minors(derivation_matrix(spec, lowest)));

  report.checks.push_back(run_check("minimal-generator-count-equals-rank", [&](CheckResult& c) {
    const std::size_t count = minimal_generator_count(*J);
    std::vector<int> degrees;
    for (const auto& g : explicit_J.gens()) degrees.push_back(g.degree());
    const bool one_degree = std::adjacent_find(degrees.begin(), degrees.end(), std::not_equal_to<>()) == degrees.end();
    c.verdict = count == spec.rank() && one_degree ? "pass" : "fail";
    c.detail = "minimal generators " + std::to_string(count) + ", rank " + std::to_string(spec.rank()) +
               ", generator degree " + std::to_string(degrees.front());
  }));
  return report;
}

std::vector<CheckResult> determinant_identity_checks(const GroupSpec& spec) {
  if (!is_family(spec)) throw PreconditionError("determinant identities need an irreducible family");
  const Arrangement A = build_arrangement(spec);
  std::vector<CheckResult> out;
  auto scalar_multiple = [](const MultiPoly& det, const MultiPoly& target) {
    return !det.is_zero() && det.monic() == target.monic();
  };
  out.push_back(run_check("jacobian-determinant", [&](CheckResult& c) {
    const InvariantSet inv = basic_invariants(spec);
    const MultiPoly det = determinant(jacobian_matrix(inv, static_cast<unsigned>(inv.polys.size())));
    const bool ok = scalar_multiple(det, jacobian_determinant_target(A));
    c.verdict = ok ? "pass" : "fail";
    c.detail = "degree " + std::to_string(det.degree());
  }));
  if (spec.kind() == Kind::FullMonomial) {
    out.push_back(run_check("derivation-determinant", [&](CheckResult& c) {
      const MultiPoly det = determinant(derivation_matrix(spec, spec.nvars()));
      const bool ok = scalar_multiple(det, defining_polynomial(A));
      c.verdict = ok ? "pass" : "fail";
      c.detail = "degree " + std::to_string(det.degree());
    }));
  }
  return out;
}

nlohmann::json SporadicCheck::to_json() const {
  return {{"group", record.name},  {"exponents", record.exponents}, {"coexponents", record.coexponents},
          {"e_M", e_M},            {"e_Q", e_Q},                    {"e_RJ", record.codim2_flat_count},
          {"e_M_matches", jacobian_route()}, {"e_Q_matches", derivation_route()}};
}

SporadicCheck sporadic_table_check(const SporadicRecord& rec) {
  const std::size_t rank = rec.exponents.size();
  if (rank < 2 || rec.coexponents.size() != rank)
    throw PreconditionError("sporadic_table_check: incomplete record for " + rec.name);
  auto lowest = [&](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.resize(rank - 1);
    return v;
  };
  SporadicCheck out{rec, 0, 0};
  out.e_M = hilbert_burch_multiplicity(lowest(rec.exponents));
  out.e_Q = hilbert_burch_multiplicity(lowest(rec.coexponents));
  return out;
}

}  // namespace reflectarr
