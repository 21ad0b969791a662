#include "fuzzyrel/automata.hpp"

namespace fuzzyrel {

FuzzyAutomaton::FuzzyAutomaton(Lattice lattice, Labels states, std::vector<std::string> alphabet,
                               std::vector<FuzzyRelation> transitions,
                               std::vector<TruthValue> initial, std::vector<TruthValue> terminal)
    : lattice_(lattice),
      states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      initial_(std::move(initial)),
      terminal_(std::move(terminal)) {
  if (states_.empty()) throw Error(ErrorKind::ShapeMismatch, "automaton without states");
  if (alphabet_.size() != transitions_.size()) {
    throw Error(ErrorKind::ShapeMismatch, "one transition matrix per letter is required");
  }
  // Reuse the relational-system checks for shape and lattice.
  (void)FuzzyRelationalSystem{lattice_, states_, transitions_};
  if (initial_.size() != states_.size() || terminal_.size() != states_.size()) {
    throw Error(ErrorKind::ShapeMismatch, "initial/terminal vectors must have one entry per state");
  }
  for (const auto& v : initial_) lattice_.require(v);
  for (const auto& v : terminal_) lattice_.require(v);
}

FuzzyEquivalence extensionality_bound(const Lattice& lattice, const Labels& states,
                                      const std::vector<TruthValue>& f) {
  if (f.size() != states.size()) throw Error(ErrorKind::ShapeMismatch, "fuzzy set size mismatch");
  for (const auto& v : f) lattice.require(v);
  return FuzzyEquivalence(FuzzyRelation::generate(
      lattice, states, states,
      [&](std::size_t a, std::size_t b) { return lattice.equiv(f[a], f[b]); }));
}

BisimulationResult greatest_bisimulation_equivalence(const FuzzyAutomaton& m,
                                                     BisimulationMode mode,
                                                     const SolveOptions& options) {
  const bool forward = mode == BisimulationMode::Forward;
  const FuzzyEquivalence w =
      extensionality_bound(m.lattice(), m.states(), forward ? m.terminal() : m.initial());
  const auto system =
      WeaklyLinearSystem::homogeneous(forward ? 5 : 4, m.transitions(), w.relation());
  BisimulationResult out{solve_greatest(system, options), std::nullopt};
  if (out.report.status == SolveStatus::Stabilized) {
    out.equivalence.emplace(out.report.solution);
  }
  return out;
}

ReducedAutomaton reduce(const FuzzyAutomaton& m, const FuzzyEquivalence& e) {
  const FuzzyRelationalSystem sys(m.lattice(), m.states(), m.transitions());
  QuotientSystem q = quotient_system(sys, e);
  const Lattice& lat = m.lattice();
  std::vector<TruthValue> initial, terminal;
  for (std::size_t c = 0; c < q.factor.size(); ++c) {
    const std::size_t a = q.factor.representative(c);
    TruthValue s = lat.bottom(), t = lat.bottom();
    for (std::size_t b = 0; b < m.size(); ++b) {
      s = lat.join(s, lat.tensor(m.initial()[b], e(b, a)));
      t = lat.join(t, lat.tensor(e(a, b), m.terminal()[b]));
    }
    initial.push_back(s);
    terminal.push_back(t);
  }
  FuzzyAutomaton reduced(lat, q.system.carrier(), m.alphabet(), q.system.relations(),
                         std::move(initial), std::move(terminal));
  return ReducedAutomaton{std::move(q.factor), std::move(reduced)};
}

SolveReport solve_between(const FuzzyAutomaton& m, const FuzzyAutomaton& n, int variant,
                          const std::optional<FuzzyRelation>& z, const SolveOptions& options) {
  if (m.alphabet() != n.alphabet()) {
    throw Error(ErrorKind::PreconditionViolation, "automata have different alphabets");
  }
  if (!(m.lattice() == n.lattice())) {
    throw Error(ErrorKind::StructureMismatch, "automata over different lattices");
  }
  FuzzyRelation bound =
      z ? z->relabeled(m.states(), n.states())
        : FuzzyRelation::universal(m.lattice(), m.states(), n.states());
  const auto system =
      WeaklyLinearSystem::heterogeneous(variant, m.transitions(), n.transitions(), std::move(bound));
  return solve_greatest(system, options);
}

}  // namespace fuzzyrel
