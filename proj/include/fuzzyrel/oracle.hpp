#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fuzzyrel/relation.hpp"
#include "fuzzyrel/solver.hpp"

namespace fuzzyrel::oracle {

// Brute-force references for the test suite. Everything here enumerates
// candidate relations exhaustively; only desk-scale instances are practical.

inline constexpr std::size_t kDefaultSpaceLimit = 1'000'000;

struct EnumerationSpace {
  std::vector<TruthValue> carrier;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

/// |carrier|^(rows·cols), or SpaceTooLarge past `limit`.
std::size_t space_size(const EnumerationSpace& space, std::size_t limit = kDefaultSpaceLimit);

/// Visits every rows×cols matrix with entries from the carrier exactly once.
void enumerate_relations(const Lattice& lattice, const EnumerationSpace& space,
                         const std::function<void(const FuzzyRelation&)>& visit,
                         std::size_t limit = kDefaultSpaceLimit);

/// Join of all solutions with entries in the subalgebra generated by the
/// system's values. The system is checked against its raw inequalities by a
/// table-driven evaluator over that finite carrier; the join is re-verified
/// with solver::verify_solution before it is returned.
FuzzyRelation brute_force_greatest(const WeaklyLinearSystem& system,
                                   std::size_t limit = kDefaultSpaceLimit);

/// Every solution with entries in the generated subalgebra.
std::vector<FuzzyRelation> all_solutions(const WeaklyLinearSystem& system,
                                         std::size_t limit = kDefaultSpaceLimit);

/// Join of all solutions whose entries lie in `carrier`, which need not be
/// closed. A lower bound on the greatest solution.
FuzzyRelation brute_force_greatest_over(const WeaklyLinearSystem& system,
                                        const std::vector<TruthValue>& carrier,
                                        std::size_t limit = kDefaultSpaceLimit);

}  // namespace fuzzyrel::oracle
