#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzyrel/automata.hpp"
#include "fuzzyrel/quotient.hpp"
#include "fuzzyrel/solver.hpp"

namespace fuzzyrel::io {

// Documents are read as YAML (so plain JSON works too) and written as JSON.
// Scalars may be given as strings or bare numbers; either way the literal
// text is parsed exactly, never through a float.

using Json = nlohmann::ordered_json;

struct Instance {
  WeaklyLinearSystem system;
  SolveOptions options;
};

/// lattice, variant, A, B, relations [{V, W}] or [{V}], Z or W, options.
/// `variant` overrides the document's variant tag when given.
Instance read_instance(const std::string& path, const std::optional<std::string>& variant = {});

/// A bare matrix, or a document holding one under "solution", "R" or "Z".
/// Rows and columns take the given labels.
FuzzyRelation read_relation(const std::string& path, const Lattice& lattice, const Labels& domain,
                            const Labels& codomain);

struct QuotientRequest {
  FuzzyRelationalSystem system;
  FuzzyEquivalence equivalence;
};

/// lattice, A, relations [matrix...], E (identity when absent).
QuotientRequest read_quotient_request(const std::string& path);

/// lattice, states, alphabet, transitions {symbol: matrix}, initial, terminal.
FuzzyAutomaton read_automaton(const std::string& path);

struct Format {
  bool decimal = false;
};

std::string scalar(const TruthValue& v, const Format& fmt);
Json matrix_json(const FuzzyRelation& r, const Format& fmt);
Json report_json(const WeaklyLinearSystem& system, const SolveReport& report, const Format& fmt);
Json quotient_json(const QuotientSystem& q, const Format& fmt);
Json automaton_json(const FuzzyAutomaton& m, const Format& fmt);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& doc);

}  // namespace fuzzyrel::io
