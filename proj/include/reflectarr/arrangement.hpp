#pragma once

// Reflection arrangements of the infinite families and their products: construction,
// intersection lattice in codimension 2 and 3, localization, essentialization and
// fixer classification.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reflectarr/linalg.hpp"
#include "reflectarr/polynomial.hpp"

namespace reflectarr {

struct SporadicRecord {
  std::string name;
  std::vector<int> exponents;
  std::vector<int> coexponents;
  long codim2_flat_count = 0;  // e(R/J)
};

/// The fifteen exceptional groups of rank at least three, as static data.
const std::vector<SporadicRecord>& sporadic_records();
const SporadicRecord* find_sporadic(std::string_view name);

class GroupSpec {
 public:
  enum class Kind { Symmetric, Monomial, FullMonomial, Product, Sporadic };

  /// Symmetric group on `letters` letters, acting on that many variables.
  static GroupSpec symmetric(unsigned letters);
  /// G(m,m,rank).
  static GroupSpec monomial(unsigned m, unsigned rank);
  /// G(m,1,rank).
  static GroupSpec full_monomial(unsigned m, unsigned rank);
  static GroupSpec product(std::vector<GroupSpec> factors);
  static GroupSpec sporadic(const SporadicRecord& rec);

  /// `A{n}`, `G(m,m,n)`, `G(m,1,n)`, `G(1,1,n)`, joined by `x`; `G23`..`G37`
  /// only when `allow_sporadic`.
  static GroupSpec parse(std::string_view text, bool allow_sporadic = false);

  Kind kind() const { return kind_; }
  unsigned m() const { return m_; }
  /// Letters for Symmetric, rank for the monomial families.
  unsigned size() const { return size_; }
  const std::vector<GroupSpec>& factors() const { return factors_; }
  const SporadicRecord& record() const { return *record_; }

  unsigned nvars() const;
  unsigned rank() const;
  /// Least common multiple of the root-of-unity orders needed.
  unsigned conductor() const;
  bool constructible() const;
  bool is_irreducible() const { return kind_ != Kind::Product; }

  /// CLI notation, e.g. `A3`, `G(3,3,3)`, `G(2,1,3)xA2`.
  std::string to_string() const;
  /// Flattened products with factors sorted by notation.
  GroupSpec canonical() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.to_string() == b.to_string();
  }

 private:
  GroupSpec(Kind k, unsigned m, unsigned size) : kind_(k), m_(m), size_(size) {}
  Kind kind_;
  unsigned m_ = 1;
  unsigned size_ = 0;
  std::vector<GroupSpec> factors_;
  const SporadicRecord* record_ = nullptr;
};

struct Hyperplane {
  CycVector coeffs;  // first nonzero entry is 1
  unsigned reflection_order = 2;
};

class Arrangement {
 public:
  Arrangement(unsigned nvars, CyclotomicField field);

  unsigned nvars() const { return nvars_; }
  const CyclotomicField& field() const { return field_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::optional<GroupSpec>& source() const { return source_; }
  void set_source(GroupSpec spec) { source_ = std::move(spec); }

  /// Normalizes and appends; returns false when the hyperplane is already present.
  bool add(CycVector coeffs, unsigned reflection_order);
  /// Index of the hyperplane with this (normalized) form, if present.
  std::optional<std::size_t> find(const CycVector& coeffs) const;

  MultiPoly form(std::size_t i) const;
  std::size_t rank() const;

  /// Same nvars, field and set of (form, order) pairs.
  friend bool operator==(const Arrangement& a, const Arrangement& b);

  /// Header line, then one `linear form ; order` per line.
  std::string serialize() const;
  static Arrangement deserialize(const std::string& text);

 private:
  unsigned nvars_;
  CyclotomicField field_;
  std::vector<Hyperplane> hyperplanes_;
  std::optional<GroupSpec> source_;
};

struct Flat {
  CycMatrix basis;                // reduced row echelon rows
  std::vector<unsigned> pivots;   // pivot column of each basis row
  unsigned codim = 0;
  std::vector<unsigned> incident; // sorted hyperplane indices

  /// The prime of the flat, generated by its basis forms.
  std::vector<MultiPoly> forms(unsigned nvars, const CyclotomicField& field) const;
  std::string key() const;
};

/// x_i - x_j, x_i - zeta_m^s x_j, coordinate hyperplanes, products on disjoint variable blocks.
Arrangement build_arrangement(const GroupSpec& spec);
/// Same over a larger cyclotomic field containing the needed roots.
Arrangement build_arrangement(const GroupSpec& spec, const CyclotomicField& field);

MultiPoly defining_polynomial(const Arrangement& A);

/// Flat spanned by the given forms, with its closed incident set.
Flat make_flat(const Arrangement& A, const CycMatrix& forms);
std::vector<Flat> flats_of_codim(const Arrangement& A, unsigned c);
/// Intersection of all hyperplanes; its codimension is the rank.
Flat center_flat(const Arrangement& A);

Arrangement localize(const Arrangement& A, const Flat& X);

/// Coordinates y = T x: the basis forms of X first, then the standard
/// coordinates at X's non-pivot columns.
CycMatrix essentialization_matrix(const Flat& X, unsigned nvars, const CyclotomicField& field);
/// Arrangement in codim(X) variables given by the coordinates of each form in X's basis.
Arrangement essentialize(const Arrangement& AX, const Flat& X);

/// Fixer type of X, per connectivity class of the incident hyperplanes.
/// Throws UnclassifiableFixer when a class does not have the shape of its type.
GroupSpec classify_fixer(const GroupSpec& spec, const Arrangement& A, const Flat& X);
GroupSpec classify_fixer(const GroupSpec& spec, const Flat& X);

}  // namespace reflectarr
