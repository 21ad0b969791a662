#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "fuzzyrel/lattice.hpp"

namespace fuzzyrel {

using Labels = std::vector<std::string>;

/// Labels "1", "2", ..., "n".
Labels numbered_labels(std::size_t n);

/// A fuzzy relation between two finite, non-empty, labeled sets, stored as a
/// dense row-major matrix over one lattice. Immutable once built.
class FuzzyRelation {
 public:
  using Rows = std::vector<std::vector<TruthValue>>;

  /// Validates shape, non-emptiness and carrier membership of every entry.
  FuzzyRelation(Lattice lattice, Labels domain, Labels codomain, Rows rows);
  FuzzyRelation(Lattice lattice, Labels domain, Labels codomain,
                std::vector<TruthValue> entries);

  /// Builds entries from f(row, col) without re-validating them; f must
  /// return carrier members.
  static FuzzyRelation generate(
      const Lattice& lattice, Labels domain, Labels codomain,
      const std::function<TruthValue(std::size_t, std::size_t)>& f);

  static FuzzyRelation identity(const Lattice& lattice, Labels labels);
  static FuzzyRelation universal(const Lattice& lattice, Labels domain, Labels codomain);
  static FuzzyRelation empty(const Lattice& lattice, Labels domain, Labels codomain);

  const Lattice& lattice() const { return lattice_; }
  const Labels& domain() const { return domain_; }
  const Labels& codomain() const { return codomain_; }
  std::size_t rows() const { return domain_.size(); }
  std::size_t cols() const { return codomain_.size(); }
  bool is_square() const { return rows() == cols(); }

  const TruthValue& operator()(std::size_t a, std::size_t b) const {
    return entries_[a * cols() + b];
  }
  const std::vector<TruthValue>& entries() const { return entries_; }
  Rows to_rows() const;

  /// Same matrix with new labels (sizes must match).
  FuzzyRelation relabeled(Labels domain, Labels codomain) const;

  /// Exact equality of lattice and entries; labels are not compared.
  friend bool operator==(const FuzzyRelation& r, const FuzzyRelation& s) {
    return r.lattice_ == s.lattice_ && r.rows() == s.rows() && r.cols() == s.cols() &&
           r.entries_ == s.entries_;
  }

 private:
  struct Unchecked {};
  FuzzyRelation(Unchecked, Lattice lattice, Labels domain, Labels codomain,
                std::vector<TruthValue> entries);

  Lattice lattice_;
  Labels domain_;
  Labels codomain_;
  std::vector<TruthValue> entries_;
};

/// Entrywise R ≤ S (same shape and lattice required).
bool leq(const FuzzyRelation& r, const FuzzyRelation& s);
/// Set of distinct entries.
std::vector<TruthValue> image(const FuzzyRelation& r);
bool is_crisp(const FuzzyRelation& r);

FuzzyRelation compose(const FuzzyRelation& r, const FuzzyRelation& s);
FuzzyRelation converse(const FuzzyRelation& r);
/// Z/V: greatest U with V∘U ≤ Z; V square on Z's domain.
FuzzyRelation right_residual(const FuzzyRelation& z, const FuzzyRelation& v);
/// Z\W: greatest U with U∘W ≤ Z; W square on Z's codomain.
FuzzyRelation left_residual(const FuzzyRelation& z, const FuzzyRelation& w);
FuzzyRelation meet(const FuzzyRelation& r, const FuzzyRelation& s);
FuzzyRelation join(const FuzzyRelation& r, const FuzzyRelation& s);
FuzzyRelation crisp_part(const FuzzyRelation& r);

bool is_reflexive(const FuzzyRelation& r);
bool is_symmetric(const FuzzyRelation& r);
bool is_transitive(const FuzzyRelation& r);

/// A reflexive, symmetric, transitive fuzzy relation on one set.
class FuzzyEquivalence {
 public:
  /// Throws ErrorKind::NotAnEquivalence if any property fails.
  explicit FuzzyEquivalence(FuzzyRelation base);

  static FuzzyEquivalence identity(const Lattice& lattice, Labels labels);
  static FuzzyEquivalence universal(const Lattice& lattice, Labels labels);

  const FuzzyRelation& relation() const { return base_; }
  operator const FuzzyRelation&() const { return base_; }
  std::size_t size() const { return base_.rows(); }
  const TruthValue& operator()(std::size_t a, std::size_t b) const { return base_(a, b); }

  friend bool operator==(const FuzzyEquivalence&, const FuzzyEquivalence&) = default;

 private:
  FuzzyRelation base_;
};

bool is_equivalence(const FuzzyRelation& r);

/// Kernel E_A^R(a1,a2) = ⋀_b R(a1,b) ↔ R(a2,b).
FuzzyEquivalence kernel(const FuzzyRelation& r);
/// Co-kernel E_B^R(b1,b2) = ⋀_a R(a,b1) ↔ R(a,b2).
FuzzyEquivalence cokernel(const FuzzyRelation& r);

/// E∘R ≤ R and R∘F ≤ R.
bool is_extensional(const FuzzyRelation& r, const FuzzyRelation& e,
                    const FuzzyRelation& f);
/// R∘R⁻¹∘R ≤ R.
bool is_partial_fuzzy_function(const FuzzyRelation& r);
/// Every row contains a 1.
bool is_l_function(const FuzzyRelation& r);
/// Every column contains a 1.
bool is_surjective(const FuzzyRelation& r);
/// Surjective L-function with R∘R⁻¹∘R = R.
bool is_uniform(const FuzzyRelation& r);

/// ψ with R(a, ψ(a)) = 1, choosing the lowest column index per row.
/// Throws ErrorKind::NotAnLFunction when some row has no 1.
std::vector<std::size_t> crisp_description(const FuzzyRelation& r);

}  // namespace fuzzyrel
