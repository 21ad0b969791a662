#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fuzzyrel/automata.hpp"
#include "fuzzyrel/lattice.hpp"
#include "fuzzyrel/oracle.hpp"
#include "fuzzyrel/quotient.hpp"
#include "fuzzyrel/relation.hpp"
#include "fuzzyrel/solver.hpp"

namespace testing {

using namespace fuzzyrel;

using Grid = std::vector<std::vector<std::string>>;

inline TruthValue tv(const std::string& s) { return TruthValue::parse(s); }

inline FuzzyRelation mat(const Lattice& lat, const Grid& g) {
  FuzzyRelation::Rows rows;
  for (const auto& r : g) {
    auto& row = rows.emplace_back();
    for (const auto& x : r) row.push_back(parse_value(lat, x));
  }
  return FuzzyRelation(lat, numbered_labels(g.size()), numbered_labels(g.front().size()), rows);
}

inline FuzzyRelation mat(const Lattice& lat, const Grid& g, const Labels& dom, const Labels& cod) {
  return mat(lat, g).relabeled(dom, cod);
}

struct WorkedExample {
  Lattice lat = Lattice::goedel();
  FuzzyRelation v1 = mat(lat, {{"1", "0.3", "0.4"}, {"0.5", "1", "0.3"}, {"0.4", "0.6", "0.7"}});
  FuzzyRelation v2 = mat(lat, {{"0.5", "0.6", "0.2"}, {"0.6", "0.3", "0.4"}, {"0.7", "0.7", "1"}});
  FuzzyRelation w1 = mat(lat, {{"1", "0.6"}, {"0.6", "0.7"}});
  FuzzyRelation w2 = mat(lat, {{"0.6", "0.6"}, {"0.7", "1"}});
  FuzzyRelation z = FuzzyRelation::universal(lat, numbered_labels(3), numbered_labels(2));

  // Published greatest solutions for variants 1..6.
  std::vector<FuzzyRelation> expected = {
      mat(lat, {{"1", "0.7"}, {"1", "0.7"}, {"0.6", "1"}}),
      mat(lat, {{"1", "0.7"}, {"1", "0.7"}, {"0.7", "1"}}),
      mat(lat, {{"1", "0.6"}, {"1", "0.6"}, {"0.6", "1"}}),
      mat(lat, {{"1", "0.7"}, {"1", "0.7"}, {"0.7", "1"}}),
      mat(lat, {{"1", "0.6"}, {"1", "0.6"}, {"0.7", "1"}}),
      mat(lat, {{"1", "0.7"}, {"1", "0.7"}, {"0.6", "1"}}),
  };

  WeaklyLinearSystem system(int variant) const {
    return WeaklyLinearSystem::heterogeneous(variant, {v1, v2}, {w1, w2}, z);
  }
};

// Random instances over a fixed finite carrier.
class Gen {
 public:
  Gen(Lattice lat, std::vector<TruthValue> carrier, unsigned seed)
      : lat_(lat), carrier_(std::move(carrier)), rng_(seed) {}

  static Gen chain2(unsigned seed) {
    return Gen(Lattice::chain(2), {tv("0"), tv("1/2"), tv("1")}, seed);
  }
  static Gen goedel_half(unsigned seed) {
    return Gen(Lattice::goedel(), {tv("0"), tv("1/2"), tv("1")}, seed);
  }

  const Lattice& lattice() const { return lat_; }
  const std::vector<TruthValue>& carrier() const { return carrier_; }
  std::mt19937& rng() { return rng_; }

  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  TruthValue value() { return carrier_[between(0, carrier_.size() - 1)]; }

  FuzzyRelation relation(std::size_t n, std::size_t m) {
    FuzzyRelation::Rows rows(n);
    for (auto& r : rows) {
      for (std::size_t j = 0; j < m; ++j) r.push_back(value());
    }
    return FuzzyRelation(lat_, numbered_labels(n), numbered_labels(m), rows);
  }

  FuzzyRelation below(const FuzzyRelation& r) {
    return FuzzyRelation::generate(lat_, r.domain(), r.codomain(), [&](std::size_t a, std::size_t b) {
      std::vector<TruthValue> opts;
      for (const auto& x : carrier_) {
        if (x <= r(a, b)) opts.push_back(x);
      }
      return opts[between(0, opts.size() - 1)];
    });
  }

  // The kernel of a random relation is a random fuzzy equivalence.
  FuzzyEquivalence equivalence(std::size_t n, std::size_t width = 2) { return kernel(relation(n, width)); }

  // E ≤ F: E is the kernel of [R | S], F the kernel of R.
  std::pair<FuzzyEquivalence, FuzzyEquivalence> nested(std::size_t n) {
    const FuzzyRelation r = relation(n, between(1, 2));
    const FuzzyRelation s = relation(n, between(1, 2));
    const FuzzyRelation both = FuzzyRelation::generate(
        lat_, numbered_labels(n), numbered_labels(r.cols() + s.cols()),
        [&](std::size_t a, std::size_t b) { return b < r.cols() ? r(a, b) : s(a, b - r.cols()); });
    return {kernel(both), kernel(r)};
  }

  std::vector<FuzzyRelation> family(std::size_t count, std::size_t n) {
    std::vector<FuzzyRelation> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(relation(n, n));
    return out;
  }

  WeaklyLinearSystem heterogeneous(int variant, std::size_t max_side = 2, std::size_t max_i = 2) {
    const std::size_t na = between(1, max_side), nb = between(1, max_side), ni = between(1, max_i);
    auto v = family(ni, na);
    auto w = family(ni, nb);
    FuzzyRelation z = coin(0.4) ? FuzzyRelation::universal(lat_, numbered_labels(na), numbered_labels(nb))
                                : relation(na, nb);
    return WeaklyLinearSystem::heterogeneous(variant, std::move(v), std::move(w), std::move(z));
  }

  WeaklyLinearSystem homogeneous(int variant, std::size_t max_side = 3, std::size_t max_i = 2) {
    const std::size_t n = between(1, max_side), ni = between(1, max_i);
    FuzzyRelation w = coin(0.4) ? FuzzyRelation::universal(lat_, numbered_labels(n), numbered_labels(n))
                                : relation(n, n);
    return WeaklyLinearSystem::homogeneous(variant, family(ni, n), std::move(w));
  }

 private:
  Lattice lat_;
  std::vector<TruthValue> carrier_;
  std::mt19937 rng_;
};

// Every fuzzy equivalence on n elements with entries in the carrier.
inline std::vector<FuzzyEquivalence> all_equivalences(const Lattice& lat, const std::vector<TruthValue>& carrier,
                                               std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) cells.emplace_back(a, b);
  }
  std::vector<FuzzyEquivalence> out;
  if (cells.empty()) {
    out.push_back(FuzzyEquivalence::identity(lat, numbered_labels(n)));
    return out;
  }
  oracle::enumerate_relations(lat, {carrier, 1, cells.size()}, [&](const FuzzyRelation& off) {
    const auto r = FuzzyRelation::generate(lat, numbered_labels(n), numbered_labels(n),
                                           [&](std::size_t a, std::size_t b) {
                                             if (a == b) return TruthValue::one();
                                             const auto key = a < b ? std::pair{a, b} : std::pair{b, a};
                                             const auto i = std::find(cells.begin(), cells.end(), key) - cells.begin();
                                             return off(0, static_cast<std::size_t>(i));
                                           });
    if (is_equivalence(r)) out.emplace_back(r);
  });
  return out;
}

inline bool is_empty(const FuzzyRelation& r) {
  return r == FuzzyRelation::empty(r.lattice(), r.domain(), r.codomain());
}

}  // namespace testing
