#include "fuzzyrel/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace fuzzyrel::oracle {

namespace {

using Index = std::uint16_t;

// A finite chain carrier with a precomputed ⊗ table. Elements are addressed
// by rank, so ∨ is max on indices.
class IndexAlgebra {
 public:
  IndexAlgebra(const Lattice& lattice, std::vector<TruthValue> carrier)
      : carrier_(std::move(carrier)), size_(carrier_.size()) {
    std::sort(carrier_.begin(), carrier_.end());
    for (std::size_t i = 0; i < size_; ++i) rank_.emplace(carrier_[i], static_cast<Index>(i));
    tensor_.resize(size_ * size_);
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = 0; j < size_; ++j) {
        tensor_[i * size_ + j] = lookup(lattice.tensor(carrier_[i], carrier_[j]));
      }
    }
  }

  Index lookup(const TruthValue& v) const {
    const auto it = rank_.find(v);
    if (it == rank_.end()) throw std::logic_error("carrier is not closed: " + v.to_string());
    return it->second;
  }
  Index tensor(Index x, Index y) const { return tensor_[x * size_ + y]; }
  const TruthValue& value(Index i) const { return carrier_[i]; }
  std::size_t size() const { return size_; }

 private:
  std::vector<TruthValue> carrier_;
  std::size_t size_;
  std::map<TruthValue, Index> rank_;
  std::vector<Index> tensor_;
};

struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<Index> v;
  Index at(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
};

Mat to_mat(const IndexAlgebra& alg, const FuzzyRelation& r) {
  Mat m{r.rows(), r.cols(), {}};
  for (const auto& x : r.entries()) m.v.push_back(alg.lookup(x));
  return m;
}

Mat transpose(const Mat& m) {
  Mat t{m.cols, m.rows, std::vector<Index>(m.v.size())};
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) t.v[c * m.rows + r] = m.at(r, c);
  }
  return t;
}

Mat product(const IndexAlgebra& alg, const Mat& x, const Mat& y) {
  Mat out{x.rows, y.cols, std::vector<Index>(x.rows * y.cols, 0)};
  for (std::size_t r = 0; r < x.rows; ++r) {
    for (std::size_t c = 0; c < y.cols; ++c) {
      Index acc = 0;
      for (std::size_t k = 0; k < x.cols; ++k) acc = std::max(acc, alg.tensor(x.at(r, k), y.at(k, c)));
      out.v[r * out.cols + c] = acc;
    }
  }
  return out;
}

bool below(const Mat& x, const Mat& y) {
  for (std::size_t i = 0; i < x.v.size(); ++i) {
    if (x.v[i] > y.v[i]) return false;
  }
  return true;
}

// Raw inequalities of each system, written out independently of the
// solver's residual-based operators.
class RawChecker {
 public:
  RawChecker(const WeaklyLinearSystem& system, const IndexAlgebra& alg)
      : kind_(system.kind()), alg_(alg), bound_(to_mat(alg, system.bound())) {
    for (const auto& r : system.v_relations()) v_.push_back(to_mat(alg, r));
    for (const auto& r : system.w_relations()) w_.push_back(to_mat(alg, r));
  }

  const Mat& bound() const { return bound_; }

  bool operator()(const Mat& u) const {
    if (!below(u, bound_)) return false;
    const Mat ut = transpose(u);
    if (kind_.family == Family::Heterogeneous) return hetero(u, ut);
    if (kind_.variant <= 3) return homo(kind_.variant, u);
    return below(ut, bound_) && homo(kind_.variant - 3, u) && homo(kind_.variant - 3, ut);
  }

 private:
  bool hetero(const Mat& u, const Mat& ut) const {
    for (std::size_t i = 0; i < v_.size(); ++i) {
      const Mat& v = v_[i];
      const Mat& w = w_[i];
      auto ut_v = [&] { return product(alg_, ut, v); };
      auto w_ut = [&] { return product(alg_, w, ut); };
      auto v_u = [&] { return product(alg_, v, u); };
      auto u_w = [&] { return product(alg_, u, w); };
      bool ok = true;
      switch (kind_.variant) {
        case 1: ok = below(ut_v(), w_ut()); break;
        case 2: ok = below(v_u(), u_w()); break;
        case 3: ok = below(ut_v(), w_ut()) && below(u_w(), v_u()); break;
        case 4: ok = below(v_u(), u_w()) && below(w_ut(), ut_v()); break;
        case 5: ok = v_u().v == u_w().v; break;
        case 6: ok = ut_v().v == w_ut().v; break;
      }
      if (!ok) return false;
    }
    return true;
  }

  bool homo(int base, const Mat& u) const {
    for (const Mat& v : v_) {
      const Mat uv = product(alg_, u, v);
      const Mat vu = product(alg_, v, u);
      const bool ok = base == 1 ? below(uv, vu) : base == 2 ? below(vu, uv) : uv.v == vu.v;
      if (!ok) return false;
    }
    return true;
  }

  SystemKind kind_;
  const IndexAlgebra& alg_;
  Mat bound_;
  std::vector<Mat> v_, w_;
};

std::vector<TruthValue> closed_carrier(const WeaklyLinearSystem& system) {
  const auto seeds = system_values(system);
  const auto closure = generated_subalgebra(system.lattice(), seeds, 256);
  if (!closure.finite) {
    throw Error(ErrorKind::SpaceTooLarge, "generated subalgebra is not small enough to enumerate");
  }
  return closure.elements;
}

// Calls visit on every index matrix entrywise ≤ the bound.
template <class Visit>
void enumerate_below(const Mat& bound, std::size_t limit, Visit&& visit) {
  std::size_t count = 1;
  for (Index b : bound.v) {
    count *= static_cast<std::size_t>(b) + 1;
    if (count > limit) throw Error(ErrorKind::SpaceTooLarge, "too many candidate relations");
  }
  Mat u{bound.rows, bound.cols, std::vector<Index>(bound.v.size(), 0)};
  while (true) {
    visit(u);
    std::size_t i = 0;
    while (i < u.v.size() && u.v[i] == bound.v[i]) u.v[i++] = 0;
    if (i == u.v.size()) return;
    ++u.v[i];
  }
}

FuzzyRelation to_relation(const IndexAlgebra& alg, const WeaklyLinearSystem& system, const Mat& m) {
  return FuzzyRelation::generate(system.lattice(), system.a_labels(), system.b_labels(),
                                 [&](std::size_t r, std::size_t c) { return alg.value(m.at(r, c)); });
}

}  // namespace

std::size_t space_size(const EnumerationSpace& space, std::size_t limit) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < space.rows * space.cols; ++i) {
    count *= space.carrier.size();
    if (count > limit) throw Error(ErrorKind::SpaceTooLarge, "enumeration space exceeds limit");
  }
  return count;
}

void enumerate_relations(const Lattice& lattice, const EnumerationSpace& space,
                         const std::function<void(const FuzzyRelation&)>& visit,
                         std::size_t limit) {
  space_size(space, limit);
  if (space.carrier.empty()) return;
  for (const auto& v : space.carrier) lattice.require(v);
  const std::size_t cells = space.rows * space.cols;
  const std::size_t base = space.carrier.size();
  std::vector<std::size_t> digits(cells, 0);
  const Labels rows = numbered_labels(space.rows);
  const Labels cols = numbered_labels(space.cols);
  while (true) {
    visit(FuzzyRelation::generate(lattice, rows, cols, [&](std::size_t r, std::size_t c) {
      return space.carrier[digits[r * space.cols + c]];
    }));
    std::size_t i = 0;
    while (i < cells && digits[i] == base - 1) digits[i++] = 0;
    if (i == cells) return;
    ++digits[i];
  }
}

std::vector<FuzzyRelation> all_solutions(const WeaklyLinearSystem& system, std::size_t limit) {
  const IndexAlgebra alg(system.lattice(), closed_carrier(system));
  const RawChecker satisfies(system, alg);
  std::vector<FuzzyRelation> out;
  enumerate_below(satisfies.bound(), limit, [&](const Mat& u) {
    if (satisfies(u)) out.push_back(to_relation(alg, system, u));
  });
  return out;
}

FuzzyRelation brute_force_greatest(const WeaklyLinearSystem& system, std::size_t limit) {
  const IndexAlgebra alg(system.lattice(), closed_carrier(system));
  const RawChecker satisfies(system, alg);
  Mat acc{satisfies.bound().rows, satisfies.bound().cols,
          std::vector<Index>(satisfies.bound().v.size(), 0)};
  enumerate_below(satisfies.bound(), limit, [&](const Mat& u) {
    if (!satisfies(u)) return;
    for (std::size_t i = 0; i < acc.v.size(); ++i) acc.v[i] = std::max(acc.v[i], u.v[i]);
  });
  FuzzyRelation greatest = to_relation(alg, system, acc);
  if (!verify_solution(system, greatest)) {
    throw std::logic_error("oracle: join of all solutions is not a solution");
  }
  return greatest;
}

FuzzyRelation brute_force_greatest_over(const WeaklyLinearSystem& system,
                                        const std::vector<TruthValue>& carrier,
                                        std::size_t limit) {
  const FuzzyRelation& z = system.bound();
  std::vector<std::vector<TruthValue>> choices;
  std::size_t count = 1;
  for (const auto& bound : z.entries()) {
    auto& cell = choices.emplace_back();
    for (const auto& v : carrier) {
      if (v <= bound) cell.push_back(v);
    }
    if (cell.empty()) cell.push_back(TruthValue::zero());
    count *= cell.size();
    if (count > limit) throw Error(ErrorKind::SpaceTooLarge, "too many candidate relations");
  }
  FuzzyRelation acc = FuzzyRelation::empty(system.lattice(), z.domain(), z.codomain());
  std::vector<std::size_t> digits(choices.size(), 0);
  while (true) {
    FuzzyRelation candidate = FuzzyRelation::generate(
        system.lattice(), z.domain(), z.codomain(),
        [&](std::size_t r, std::size_t c) { return choices[r * z.cols() + c][digits[r * z.cols() + c]]; });
    if (verify_solution(system, candidate)) acc = join(acc, candidate);
    std::size_t i = 0;
    while (i < digits.size() && digits[i] + 1 == choices[i].size()) digits[i++] = 0;
    if (i == digits.size()) break;
    ++digits[i];
  }
  return acc;
}

}  // namespace fuzzyrel::oracle
