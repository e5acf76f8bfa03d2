#include "reflectarr/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "reflectarr/errors.hpp"

namespace reflectarr {

const std::vector<SporadicRecord>& sporadic_records() {
  static const std::vector<SporadicRecord> records = {
      {"G23", {1, 5, 9}, {1, 5, 9}, 31},
      {"G24", {3, 5, 13}, {1, 9, 11}, 49},
      {"G25", {5, 8, 11}, {1, 4, 7}, 21},
      {"G26", {5, 11, 17}, {1, 7, 13}, 57},
      {"G27", {5, 11, 29}, {1, 19, 25}, 201},
      {"G28", {1, 5, 7, 11}, {1, 5, 7, 11}, 122},
      {"G29", {3, 7, 11, 19}, {1, 9, 13, 17}, 310},
      {"G30", {1, 11, 19, 29}, {1, 11, 19, 29}, 722},
      {"G31", {7, 11, 19, 23}, {1, 13, 17, 29}, 710},
      {"G32", {11, 17, 23, 29}, {1, 7, 13, 19}, 330},
      {"G33", {3, 5, 9, 11, 17}, {1, 7, 9, 13, 15}, 510},
      {"G34", {5, 11, 17, 23, 29, 41}, {1, 13, 19, 25, 31, 37}, 4145},
      {"G35", {1, 4, 5, 7, 8, 11}, {1, 4, 5, 7, 8, 11}, 390},
      {"G36", {1, 5, 7, 9, 11, 13, 17}, {1, 5, 7, 9, 11, 13, 17}, 1281},
      {"G37", {1, 7, 11, 13, 17, 19, 23, 29}, {1, 7, 11, 13, 17, 19, 23, 29}, 4900},
  };
  return records;
}

const SporadicRecord* find_sporadic(std::string_view name) {
  for (const auto& r : sporadic_records())
    if (r.name == name) return &r;
  return nullptr;
}

// ---------------------------------------------------------------- GroupSpec

GroupSpec GroupSpec::symmetric(unsigned letters) {
  if (letters == 0) throw std::invalid_argument("symmetric group needs at least one letter");
  return GroupSpec(Kind::Symmetric, 1, letters);
}

GroupSpec GroupSpec::monomial(unsigned m, unsigned rank) {
  if (m < 2) throw std::invalid_argument("G(m,m,n) requires m >= 2");
  if (rank < 2) throw std::invalid_argument("G(m,m,n) requires n >= 2");
  return GroupSpec(Kind::Monomial, m, rank);
}

GroupSpec GroupSpec::full_monomial(unsigned m, unsigned rank) {
  if (m < 2) throw std::invalid_argument("G(m,1,n) requires m >= 2");
  if (rank < 1) throw std::invalid_argument("G(m,1,n) requires n >= 1");
  return GroupSpec(Kind::FullMonomial, m, rank);
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  if (factors.empty()) throw std::invalid_argument("empty product of groups");
  if (factors.size() == 1) return factors[0];
  GroupSpec g(Kind::Product, 1, 0);
  g.factors_ = std::move(factors);
  return g;
}

GroupSpec GroupSpec::sporadic(const SporadicRecord& rec) {
  GroupSpec g(Kind::Sporadic, 1, static_cast<unsigned>(rec.exponents.size()));
  g.record_ = &rec;
  return g;
}

namespace {

unsigned parse_uint(std::string_view s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("bad group spec '" + std::string(whole) + "'");
  if (s.size() > 6) throw ParseError("group parameter too large in '" + std::string(whole) + "'");
  return static_cast<unsigned>(std::stoul(std::string(s)));
}

GroupSpec parse_factor(std::string_view t, std::string_view whole, bool allow_sporadic) {
  if (t.empty()) throw ParseError("empty factor in group spec '" + std::string(whole) + "'");
  if (t[0] == 'A') return GroupSpec::symmetric(parse_uint(t.substr(1), whole) + 1);
  if (t[0] == 'G' && t.size() > 1 && t[1] == '(') {
    if (t.back() != ')') throw ParseError("missing ')' in '" + std::string(whole) + "'");
    std::string_view inner = t.substr(2, t.size() - 3);
    std::vector<unsigned> p;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = inner.find(',', start);
      p.push_back(parse_uint(inner.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start), whole));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (p.size() != 3) throw ParseError("G(m,p,n) needs three parameters in '" + std::string(whole) + "'");
    unsigned m = p[0], q = p[1], n = p[2];
    if (m == 0 || q == 0 || n == 0) throw ParseError("group parameters must be positive in '" + std::string(whole) + "'");
    if (m == 1) {
      if (q != 1) throw ParseError("G(1,p,n) requires p = 1 in '" + std::string(whole) + "'");
      return GroupSpec::symmetric(n);
    }
    if (q == m) return GroupSpec::monomial(m, n);
    if (q == 1) return GroupSpec::full_monomial(m, n);
    throw ParseError("only G(m,m,n) and G(m,1,n) are supported, got '" + std::string(t) + "'");
  }
  if (t[0] == 'G') {
    const SporadicRecord* rec = find_sporadic(t);
    if (!rec) throw ParseError("unknown group '" + std::string(t) + "'");
    if (!allow_sporadic)
      throw ParseError("sporadic group '" + std::string(t) + "' is only available to table commands");
    return GroupSpec::sporadic(*rec);
  }
  throw ParseError("unknown group syntax '" + std::string(whole) + "'");
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text, bool allow_sporadic) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::vector<GroupSpec> factors;
  std::size_t start = 0;
  while (true) {
    std::size_t x = s.find('x', start);
    factors.push_back(parse_factor(std::string_view(s).substr(start, x == std::string::npos ? std::string::npos : x - start), text, allow_sporadic));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  if (factors.size() > 1)
    for (const auto& f : factors)
      if (f.kind() == Kind::Sporadic) throw ParseError("sporadic groups cannot appear in products");
  return product(std::move(factors));
}

unsigned GroupSpec::nvars() const {
  switch (kind_) {
    case Kind::Product: {
      unsigned n = 0;
      for (const auto& f : factors_) n += f.nvars();
      return n;
    }
    default: return size_;
  }
}

unsigned GroupSpec::rank() const {
  switch (kind_) {
    case Kind::Symmetric: return size_ - 1;
    case Kind::Product: {
      unsigned r = 0;
      for (const auto& f : factors_) r += f.rank();
      return r;
    }
    default: return size_;
  }
}

unsigned GroupSpec::conductor() const {
  switch (kind_) {
    case Kind::Symmetric:
    case Kind::Sporadic: return 1;
    case Kind::Monomial:
    case Kind::FullMonomial: return m_;
    case Kind::Product: {
      unsigned c = 1;
      for (const auto& f : factors_) c = std::lcm(c, f.conductor());
      return c;
    }
  }
  return 1;
}

bool GroupSpec::constructible() const {
  if (kind_ == Kind::Sporadic) return false;
  if (kind_ == Kind::Product)
    return std::all_of(factors_.begin(), factors_.end(), [](const GroupSpec& f) { return f.constructible(); });
  return true;
}

std::string GroupSpec::to_string() const {
  switch (kind_) {
    case Kind::Symmetric: return "A" + std::to_string(size_ - 1);
    case Kind::Monomial:
      return "G(" + std::to_string(m_) + "," + std::to_string(m_) + "," + std::to_string(size_) + ")";
    case Kind::FullMonomial: return "G(" + std::to_string(m_) + ",1," + std::to_string(size_) + ")";
    case Kind::Sporadic: return record_->name;
    case Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "x" : "") + factors_[i].to_string();
      return s;
    }
  }
  return "?";
}

GroupSpec GroupSpec::canonical() const {
  if (kind_ != Kind::Product) return *this;
  std::vector<GroupSpec> flat;
  for (const auto& f : factors_) {
    GroupSpec c = f.canonical();
    if (c.kind_ == Kind::Product)
      flat.insert(flat.end(), c.factors_.begin(), c.factors_.end());
    else
      flat.push_back(c);
  }
  std::sort(flat.begin(), flat.end(),
            [](const GroupSpec& a, const GroupSpec& b) { return a.to_string() < b.to_string(); });
  return product(std::move(flat));
}

// ---------------------------------------------------------------- Arrangement

Arrangement::Arrangement(unsigned nvars, CyclotomicField field) : nvars_(nvars), field_(std::move(field)) {
  if (nvars == 0 || nvars > kMaxVars) throw std::invalid_argument("arrangement: unsupported number of variables");
}

bool Arrangement::add(CycVector coeffs, unsigned reflection_order) {
  if (coeffs.size() != nvars_) throw std::invalid_argument("hyperplane has wrong number of coefficients");
  for (const auto& c : coeffs)
    if (!(c.field() == field_)) throw std::invalid_argument("hyperplane coefficient from another field");
  if (reflection_order < 2) throw std::invalid_argument("reflection order must be at least 2");
  CycVector n = normalize_leading_one(std::move(coeffs));
  if (find(n)) return false;
  hyperplanes_.push_back({std::move(n), reflection_order});
  return true;
}

std::optional<std::size_t> Arrangement::find(const CycVector& coeffs) const {
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
    if (hyperplanes_[i].coeffs == coeffs) return i;
  return std::nullopt;
}

MultiPoly Arrangement::form(std::size_t i) const { return MultiPoly::linear_form(hyperplanes_.at(i).coeffs); }

std::size_t Arrangement::rank() const {
  CycMatrix rows;
  for (const auto& h : hyperplanes_) rows.push_back(h.coeffs);
  return matrix_rank(rows, field_, nvars_);
}

namespace {
std::string vector_key(const CycVector& v) {
  std::string s;
  for (const auto& c : v) s += c.to_string() + "|";
  return s;
}
}  // namespace

bool operator==(const Arrangement& a, const Arrangement& b) {
  if (a.nvars_ != b.nvars_ || !(a.field_ == b.field_) || a.size() != b.size()) return false;
  std::multiset<std::string> sa, sb;
  for (const auto& h : a.hyperplanes_) sa.insert(vector_key(h.coeffs) + std::to_string(h.reflection_order));
  for (const auto& h : b.hyperplanes_) sb.insert(vector_key(h.coeffs) + std::to_string(h.reflection_order));
  return sa == sb;
}

std::string Arrangement::serialize() const {
  std::ostringstream out;
  out << "arrangement nvars=" << nvars_ << " conductor=" << field_.conductor() << "\n";
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
    out << form(i).to_string() << " ; " << hyperplanes_[i].reflection_order << "\n";
  return out.str();
}

Arrangement Arrangement::deserialize(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  std::size_t lineno = 0;
  while (std::getline(in, header)) {
    ++lineno;
    if (!header.empty() && header[0] != '#') break;
  }
  unsigned nvars = 0, conductor = 0;
  if (std::sscanf(header.c_str(), "arrangement nvars=%u conductor=%u", &nvars, &conductor) != 2)
    throw ParseError("bad arrangement header '" + header + "'", lineno);
  if (nvars == 0 || nvars > kMaxVars) throw ParseError("unsupported number of variables", lineno);
  if (conductor == 0) throw ParseError("conductor must be positive", lineno);
  CyclotomicField field(conductor);
  Arrangement A(nvars, field);
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::size_t semi = line.find(';');
    unsigned order = 2;
    std::string form_text = line.substr(0, semi);
    if (semi != std::string::npos) {
      std::string o = line.substr(semi + 1);
      o.erase(0, o.find_first_not_of(" \t"));
      o.erase(o.find_last_not_of(" \t\r") + 1);
      try {
        order = static_cast<unsigned>(std::stoul(o));
      } catch (const std::exception&) {
        throw ParseError("bad reflection order '" + o + "'", lineno);
      }
    }
    MultiPoly p(nvars, field);
    try {
      p = MultiPoly::parse(form_text, nvars, field);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
    if (p.is_zero() || !p.is_homogeneous() || p.degree() != 1)
      throw ParseError("hyperplane must be a nonzero linear form", lineno);
    CycVector coeffs(nvars, CyclotomicNumber(field));
    for (const auto& t : p.terms())
      for (unsigned v = 0; v < nvars; ++v)
        if (t.mono[v]) coeffs[v] = CyclotomicNumber(field, t.coeff);
    try {
      A.add(std::move(coeffs), order);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return A;
}

// ---------------------------------------------------------------- construction

namespace {

void build_into(Arrangement& A, const GroupSpec& spec, unsigned offset) {
  const CyclotomicField& F = A.field();
  const unsigned n = A.nvars();
  auto pair_form = [&](unsigned i, unsigned j, const CyclotomicNumber& root) {
    CycVector v(n, CyclotomicNumber(F));
    v[offset + i] = CyclotomicNumber(F, Rational(1));
    v[offset + j] = -root;
    return v;
  };
  switch (spec.kind()) {
    case GroupSpec::Kind::Symmetric: {
      CyclotomicNumber one(F, Rational(1));
      for (unsigned i = 0; i < spec.size(); ++i)
        for (unsigned j = i + 1; j < spec.size(); ++j) A.add(pair_form(i, j, one), 2);
      break;
    }
    case GroupSpec::Kind::Monomial:
    case GroupSpec::Kind::FullMonomial: {
      const unsigned m = spec.m();
      if (F.conductor() % m != 0)
        throw std::invalid_argument("field conductor " + std::to_string(F.conductor()) +
                                    " lacks primitive " + std::to_string(m) + "-th roots");
      const long step = F.conductor() / m;
      for (unsigned i = 0; i < spec.size(); ++i)
        for (unsigned j = i + 1; j < spec.size(); ++j)
          for (unsigned s = 0; s < m; ++s)
            A.add(pair_form(i, j, CyclotomicNumber::root_of_unity(F, step * s)), 2);
      if (spec.kind() == GroupSpec::Kind::FullMonomial)
        for (unsigned i = 0; i < spec.size(); ++i) {
          CycVector v(n, CyclotomicNumber(F));
          v[offset + i] = CyclotomicNumber(F, Rational(1));
          A.add(std::move(v), m);
        }
      break;
    }
    case GroupSpec::Kind::Product: {
      unsigned off = offset;
      for (const auto& f : spec.factors()) {
        build_into(A, f, off);
        off += f.nvars();
      }
      break;
    }
    case GroupSpec::Kind::Sporadic:
      throw UnsupportedConstruction("no construction for sporadic group " + spec.to_string());
  }
}

}  // namespace

Arrangement build_arrangement(const GroupSpec& spec) {
  return build_arrangement(spec, CyclotomicField(spec.conductor()));
}

Arrangement build_arrangement(const GroupSpec& spec, const CyclotomicField& field) {
  if (spec.kind() == GroupSpec::Kind::Sporadic || !spec.constructible())
    throw UnsupportedConstruction("no construction for " + spec.to_string());
  Arrangement A(spec.nvars(), field);
  build_into(A, spec, 0);
  A.set_source(spec);
  return A;
}

MultiPoly defining_polynomial(const Arrangement& A) {
  MultiPoly p = MultiPoly::constant(A.nvars(), A.field(), Rational(1));
  for (std::size_t i = 0; i < A.size(); ++i) p = p * A.form(i);
  return p;
}

// ---------------------------------------------------------------- flats

std::vector<MultiPoly> Flat::forms(unsigned nvars, const CyclotomicField&) const {
  std::vector<MultiPoly> out;
  for (const auto& row : basis) {
    if (row.size() != nvars) throw std::invalid_argument("flat basis has wrong width");
    out.push_back(MultiPoly::linear_form(row));
  }
  return out;
}

std::string Flat::key() const {
  std::string s;
  for (const auto& row : basis) s += vector_key(row) + "/";
  return s;
}

Flat make_flat(const Arrangement& A, const CycMatrix& forms) {
  RowEchelon e = row_reduce(forms, A.field(), A.nvars());
  Flat X;
  X.basis = e.rows;
  X.pivots = e.pivots;
  X.codim = static_cast<unsigned>(e.rank());
  for (std::size_t i = 0; i < A.size(); ++i)
    if (row_space_coordinates(e, A.hyperplanes()[i].coeffs)) X.incident.push_back(static_cast<unsigned>(i));
  return X;
}

std::vector<Flat> flats_of_codim(const Arrangement& A, unsigned c) {
  if (c != 2 && c != 3) throw std::invalid_argument("flats_of_codim: codimension must be 2 or 3");
  const std::size_t h = A.size();
  std::vector<Flat> codim2;
  std::vector<std::vector<bool>> covered(h, std::vector<bool>(h, false));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j) {
      if (covered[i][j]) continue;
      Flat X = make_flat(A, {A.hyperplanes()[i].coeffs, A.hyperplanes()[j].coeffs});
      for (unsigned a : X.incident)
        for (unsigned b : X.incident) covered[a][b] = true;
      codim2.push_back(std::move(X));
    }
  if (c == 2) return codim2;
  std::vector<Flat> codim3;
  std::map<std::string, std::size_t> seen;
  for (const auto& F : codim2) {
    std::vector<bool> done(h, false);
    for (unsigned a : F.incident) done[a] = true;
    for (std::size_t k = 0; k < h; ++k) {
      if (done[k]) continue;
      CycMatrix forms = F.basis;
      forms.push_back(A.hyperplanes()[k].coeffs);
      Flat X = make_flat(A, forms);
      for (unsigned a : X.incident) done[a] = true;
      std::string key = X.key();
      if (seen.emplace(key, codim3.size()).second) codim3.push_back(std::move(X));
    }
  }
  return codim3;
}

Flat center_flat(const Arrangement& A) {
  CycMatrix forms;
  for (const auto& hp : A.hyperplanes()) forms.push_back(hp.coeffs);
  if (forms.empty()) {
    Flat X;
    return X;
  }
  return make_flat(A, forms);
}

Arrangement localize(const Arrangement& A, const Flat& X) {
  Arrangement out(A.nvars(), A.field());
  for (unsigned i : X.incident) out.add(A.hyperplanes().at(i).coeffs, A.hyperplanes()[i].reflection_order);
  return out;
}

CycMatrix essentialization_matrix(const Flat& X, unsigned nvars, const CyclotomicField& field) {
  CycMatrix T = X.basis;
  std::vector<bool> pivot(nvars, false);
  for (unsigned p : X.pivots) pivot[p] = true;
  for (unsigned j = 0; j < nvars; ++j) {
    if (pivot[j]) continue;
    CycVector e(nvars, CyclotomicNumber(field));
    e[j] = CyclotomicNumber(field, Rational(1));
    T.push_back(std::move(e));
  }
  return T;
}

Arrangement essentialize(const Arrangement& AX, const Flat& X) {
  if (X.codim == 0) throw std::invalid_argument("essentialize: flat of codimension 0");
  RowEchelon e{X.basis, X.pivots};
  Arrangement out(X.codim, AX.field());
  for (const auto& hp : AX.hyperplanes()) {
    auto coords = row_space_coordinates(e, hp.coeffs);
    if (!coords) throw std::invalid_argument("essentialize: hyperplane does not contain the flat");
    out.add(*coords, hp.reflection_order);
  }
  return out;
}

// ---------------------------------------------------------------- fixers

namespace {

struct Block {
  unsigned offset;
  GroupSpec spec;
};

void collect_blocks(const GroupSpec& spec, unsigned offset, std::vector<Block>& out) {
  if (spec.kind() == GroupSpec::Kind::Product) {
    for (const auto& f : spec.factors()) {
      collect_blocks(f, offset, out);
      offset += f.nvars();
    }
    return;
  }
  if (spec.kind() == GroupSpec::Kind::Sporadic)
    throw std::invalid_argument("classify_fixer: sporadic groups are not supported");
  out.push_back({offset, spec});
}

unsigned find_root(std::vector<unsigned>& parent, unsigned x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

long choose2(long k) { return k * (k - 1) / 2; }

}  // namespace

GroupSpec classify_fixer(const GroupSpec& spec, const Arrangement& A, const Flat& X) {
  if (A.nvars() != spec.nvars()) throw std::invalid_argument("classify_fixer: arrangement/spec size mismatch");
  std::vector<Block> blocks;
  collect_blocks(spec, 0, blocks);
  const unsigned n = A.nvars();
  std::vector<unsigned> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  std::vector<bool> touched(n, false);
  std::vector<std::vector<unsigned>> support;
  for (unsigned i : X.incident) {
    std::vector<unsigned> s;
    const auto& c = A.hyperplanes().at(i).coeffs;
    for (unsigned v = 0; v < n; ++v)
      if (!c[v].is_zero()) s.push_back(v);
    if (s.empty() || s.size() > 2)
      throw UnclassifiableFixer("hyperplane outside the monomial-group patterns");
    for (unsigned v : s) touched[v] = true;
    if (s.size() == 2) parent[find_root(parent, s[0])] = find_root(parent, s[1]);
    support.push_back(std::move(s));
  }
  // Classes keyed by their smallest variable.
  std::map<unsigned, std::vector<unsigned>> class_vars;
  for (unsigned v = 0; v < n; ++v)
    if (touched[v]) class_vars[find_root(parent, v)].push_back(v);
  std::vector<std::pair<unsigned, GroupSpec>> factors;
  for (const auto& [root, vars] : class_vars) {
    const Block* block = nullptr;
    for (const auto& b : blocks)
      if (vars.front() >= b.offset && vars.front() < b.offset + b.spec.nvars()) block = &b;
    if (!block || vars.back() >= block->offset + block->spec.nvars())
      throw UnclassifiableFixer("connectivity class crosses factor blocks");
    long hyperplanes = 0, coordinates = 0;
    std::map<std::pair<unsigned, unsigned>, long> pair_count;
    for (const auto& s : support) {
      if (find_root(parent, s[0]) != root) continue;
      ++hyperplanes;
      if (s.size() == 1)
        ++coordinates;
      else
        ++pair_count[{s[0], s[1]}];
    }
    bool multiple_roots = false;
    for (const auto& [p, cnt] : pair_count)
      if (cnt >= 2) multiple_roots = true;
    const long k = static_cast<long>(vars.size());
    const unsigned m = block->spec.m();
    GroupSpec type = GroupSpec::symmetric(static_cast<unsigned>(k));
    long expected = choose2(k);
    switch (block->spec.kind()) {
      case GroupSpec::Kind::Symmetric: break;
      case GroupSpec::Kind::Monomial:
        if (multiple_roots) {
          type = GroupSpec::monomial(m, static_cast<unsigned>(k));
          expected = m * choose2(k);
        }
        break;
      case GroupSpec::Kind::FullMonomial:
        if (multiple_roots || coordinates > 0) {
          type = GroupSpec::full_monomial(m, static_cast<unsigned>(k));
          expected = m * choose2(k) + k;
        }
        break;
      default: throw UnclassifiableFixer("unsupported factor type");
    }
    if (type.kind() == GroupSpec::Kind::Symmetric && coordinates > 0)
      throw UnclassifiableFixer("coordinate hyperplane in a symmetric-type class");
    if (hyperplanes != expected)
      throw UnclassifiableFixer("class on variables starting at x" + std::to_string(vars.front()) + " has " +
                                std::to_string(hyperplanes) + " hyperplanes, " + type.to_string() +
                                " needs " + std::to_string(expected));
    factors.emplace_back(vars.front(), type);
  }
  if (factors.empty()) throw UnclassifiableFixer("flat lies on no hyperplane");
  std::vector<GroupSpec> specs;
  for (auto& f : factors) specs.push_back(f.second);
  GroupSpec result = GroupSpec::product(std::move(specs));
  if (result.rank() != X.codim)
    throw UnclassifiableFixer("fixer rank " + std::to_string(result.rank()) + " differs from codimension " +
                              std::to_string(X.codim));
  return result;
}

GroupSpec classify_fixer(const GroupSpec& spec, const Flat& X) {
  return classify_fixer(spec, build_arrangement(spec), X);
}

}  // namespace reflectarr
