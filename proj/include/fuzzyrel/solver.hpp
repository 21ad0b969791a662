#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyrel/relation.hpp"

namespace fuzzyrel {

enum class Family { Homogeneous, Heterogeneous };

/// One of the twelve weakly linear systems wl1-1 … wl1-6, wl2-1 … wl2-6.
struct SystemKind {
  Family family = Family::Heterogeneous;
  int variant = 1;

  SystemKind() = default;
  SystemKind(Family family, int variant);

  /// "wl1-4", "wl2-3", ...
  static SystemKind parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const SystemKind&, const SystemKind&) = default;
};

/// Heterogeneous: U ∈ R(A,B) with relation families {V_i} on A and {W_i} on B
/// and bound Z ∈ R(A,B). Homogeneous: U ∈ R(A) with {V_i} on A and bound
/// W ∈ R(A); w_relations() then returns the V family.
class WeaklyLinearSystem {
 public:
  static WeaklyLinearSystem heterogeneous(int variant, std::vector<FuzzyRelation> v,
                                          std::vector<FuzzyRelation> w, FuzzyRelation z);
  static WeaklyLinearSystem homogeneous(int variant, std::vector<FuzzyRelation> v,
                                        FuzzyRelation w);
  /// Same data, different variant of the same family.
  WeaklyLinearSystem with_variant(int variant) const;

  const SystemKind& kind() const { return kind_; }
  const std::vector<FuzzyRelation>& v_relations() const { return v_; }
  const std::vector<FuzzyRelation>& w_relations() const { return w_; }
  const FuzzyRelation& bound() const { return bound_; }
  const Lattice& lattice() const { return bound_.lattice(); }
  const Labels& a_labels() const { return bound_.domain(); }
  const Labels& b_labels() const { return bound_.codomain(); }

 private:
  WeaklyLinearSystem(SystemKind kind, std::vector<FuzzyRelation> v,
                     std::vector<FuzzyRelation> w, FuzzyRelation bound);

  SystemKind kind_;
  std::vector<FuzzyRelation> v_;
  std::vector<FuzzyRelation> w_;
  FuzzyRelation bound_;
};

enum class SolveStatus { Stabilized, CapReached };
const char* to_string(SolveStatus status);

struct SolveOptions {
  std::size_t max_iterations = 1000;
};

struct SolveReport {
  FuzzyRelation solution;
  /// k of the first R_k = R_{k+1}, or the cap.
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::Stabilized;
  /// Direct re-check of the original inequalities.
  bool verified = false;
};

/// φ operator of the given variant (within the system's family) applied to R.
/// For heterogeneous systems these are the six operators built from residuals;
/// homogeneous systems use the operator of their heterogeneous rewrite.
FuzzyRelation phi(const WeaklyLinearSystem& system, int variant, const FuzzyRelation& r);
FuzzyRelation phi(const WeaklyLinearSystem& system, const FuzzyRelation& r);

/// The relation U must stay below: Z (or W), and W ∧ W⁻¹ for wl1-4 … wl1-6.
FuzzyRelation effective_bound(const WeaklyLinearSystem& system);

/// Greatest solution by R₁ = bound, R_{k+1} = R_k ∧ φ(R_k).
SolveReport solve_greatest(const WeaklyLinearSystem& system, const SolveOptions& options = {});

/// (φ)^c(ρ) for crisp ρ, evaluated through the pointwise characterizations.
FuzzyRelation phi_crisp(const WeaklyLinearSystem& system, int variant, const FuzzyRelation& rho);
FuzzyRelation phi_crisp(const WeaklyLinearSystem& system, const FuzzyRelation& rho);

/// Greatest crisp solution; always stabilizes.
SolveReport solve_greatest_crisp(const WeaklyLinearSystem& system);

/// True iff R satisfies the original inequalities/equations and the bound.
/// Throws std::logic_error if the direct check and R ≤ φ(R) disagree.
bool verify_solution(const WeaklyLinearSystem& system, const FuzzyRelation& r);

/// Direct check only, without the φ cross-check.
bool satisfies_system(const WeaklyLinearSystem& system, const FuzzyRelation& r);

struct TerminationPrediction {
  bool guaranteed_finite = false;
  /// Size of the generated subalgebra when finite.
  std::size_t subalgebra_size = 0;
};

/// Values of the bound and of every V_i, W_i.
std::vector<TruthValue> system_values(const WeaklyLinearSystem& system);

TerminationPrediction predict_termination(const WeaklyLinearSystem& system,
                                          std::size_t cap = 4096);

}  // namespace fuzzyrel
