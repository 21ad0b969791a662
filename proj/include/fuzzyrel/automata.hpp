#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzyrel/quotient.hpp"
#include "fuzzyrel/solver.hpp"

namespace fuzzyrel {

/// Fuzzy automaton (A, X, {δ_x}, σ, τ) over one lattice.
class FuzzyAutomaton {
 public:
  FuzzyAutomaton(Lattice lattice, Labels states, std::vector<std::string> alphabet,
                 std::vector<FuzzyRelation> transitions, std::vector<TruthValue> initial,
                 std::vector<TruthValue> terminal);

  const Lattice& lattice() const { return lattice_; }
  const Labels& states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  /// δ_x in alphabet order.
  const std::vector<FuzzyRelation>& transitions() const { return transitions_; }
  const std::vector<TruthValue>& initial() const { return initial_; }
  const std::vector<TruthValue>& terminal() const { return terminal_; }

 private:
  Lattice lattice_;
  Labels states_;
  std::vector<std::string> alphabet_;
  std::vector<FuzzyRelation> transitions_;
  std::vector<TruthValue> initial_;
  std::vector<TruthValue> terminal_;
};

/// W(a,b) = f(a) ↔ f(b): the greatest fuzzy equivalence the fuzzy set f is
/// extensional with respect to.
FuzzyEquivalence extensionality_bound(const Lattice& lattice, const Labels& states,
                                      const std::vector<TruthValue>& f);

enum class BisimulationMode { Forward, Backward };

struct BisimulationResult {
  SolveReport report;
  /// Present when the solver stabilized.
  std::optional<FuzzyEquivalence> equivalence;
};

/// Forward: greatest solution of wl1-5 with W from τ; backward: wl1-4 with W
/// from σ.
BisimulationResult greatest_bisimulation_equivalence(const FuzzyAutomaton& m,
                                                     BisimulationMode mode,
                                                     const SolveOptions& options = {});

struct ReducedAutomaton {
  FactorSet factor;
  FuzzyAutomaton automaton;
};

inline constexpr const char* kFactorAutomatonConstruction =
    "factor automaton: delta_x -> E.delta_x.E, sigma -> sigma.E, tau -> E.tau";

/// Factor automaton on A/E: δ_x ↦ E∘δ_x∘E, σ ↦ σ∘E, τ ↦ E∘τ.
ReducedAutomaton reduce(const FuzzyAutomaton& m, const FuzzyEquivalence& e);

/// Greatest solution of wl2-variant between the transition families of M and
/// N under bound Z (universal when absent).
SolveReport solve_between(const FuzzyAutomaton& m, const FuzzyAutomaton& n, int variant,
                          const std::optional<FuzzyRelation>& z = std::nullopt,
                          const SolveOptions& options = {});

}  // namespace fuzzyrel
