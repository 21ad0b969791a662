#pragma once

#include <cstddef>
#include <vector>

#include "fuzzyrel/relation.hpp"
#include "fuzzyrel/solver.hpp"

namespace fuzzyrel {

/// A set with a family {V_i} of fuzzy relations on it.
class FuzzyRelationalSystem {
 public:
  FuzzyRelationalSystem(Lattice lattice, Labels carrier, std::vector<FuzzyRelation> relations);

  const Lattice& lattice() const { return lattice_; }
  const Labels& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  const std::vector<FuzzyRelation>& relations() const { return relations_; }

 private:
  Lattice lattice_;
  Labels carrier_;
  std::vector<FuzzyRelation> relations_;
};

/// The factor set A/E: elements with identical E-rows form one class; each
/// class is represented by its lowest-index member.
class FactorSet {
 public:
  explicit FactorSet(const FuzzyEquivalence& e);

  /// ind(E)
  std::size_t size() const { return classes_.size(); }
  std::size_t class_of(std::size_t a) const { return class_of_[a]; }
  std::size_t representative(std::size_t c) const { return classes_[c].front(); }
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  const Labels& source() const { return source_; }
  /// "{a,b}" per class; singletons keep their element label.
  Labels labels() const;

 private:
  Labels source_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> classes_;
};

struct QuotientSystem {
  FactorSet factor;
  FuzzyRelationalSystem system;
};

/// V_i^{A/E}(E_a1, E_a2) = (E∘V_i∘E)(a1, a2).
QuotientSystem quotient_system(const FuzzyRelationalSystem& sys, const FuzzyEquivalence& e);

/// E♮(a, E_b) = E(a, b).
FuzzyRelation natural_map(const FuzzyEquivalence& e);

/// F/E(E_a1, E_a2) = F(a1, a2); requires E ≤ F.
FuzzyEquivalence relative_quotient(const FuzzyEquivalence& f, const FuzzyEquivalence& e);

/// F_E(a, E_b) = F(a, b); requires E ≤ F.
FuzzyRelation lift(const FuzzyEquivalence& f, const FuzzyEquivalence& e);

/// R̃ : A/E_A^R → B/E_B^R for a uniform R.
struct InducedBijection {
  FactorSet domain_classes;
  FactorSet codomain_classes;
  /// map[class of a] = class of ψ(a)
  std::vector<std::size_t> map;
};

/// Throws ErrorKind::NotUniform unless is_uniform(R).
InducedBijection induced_bijection(const FuzzyRelation& r);

/// Bijective and V_i(a1,a2) = W_i(φ(a1), φ(a2)) for all i, a1, a2.
bool is_isomorphism(const std::vector<std::size_t>& map, const FuzzyRelationalSystem& a,
                    const FuzzyRelationalSystem& b);

/// F_a ↦ (F/E)-class of E_a, from A/F onto (A/E)/(F/E).
std::vector<std::size_t> second_isomorphism_witness(const FuzzyEquivalence& f,
                                                    const FuzzyEquivalence& e);

struct UniformDecomposition {
  FuzzyEquivalence kernel;
  FuzzyEquivalence cokernel;
  InducedBijection iso;
};

/// Splits a uniform solution of wl2-3 (or wl2-5) into its kernel, co-kernel
/// and the isomorphism of the quotient systems. Conditions (i)-(iii) are
/// re-verified before returning.
UniformDecomposition decompose_uniform_solution(const FuzzyRelation& r,
                                                const WeaklyLinearSystem& system);

/// R(a, b) = F(ψ(a), b) with ψ(a) the representative of iso(E_a). Throws
/// PreconditionViolation unless the result has kernel E and co-kernel F.
FuzzyRelation reconstruct_uniform(const FuzzyEquivalence& e, const FuzzyEquivalence& f,
                                  const std::vector<std::size_t>& map);

}  // namespace fuzzyrel
