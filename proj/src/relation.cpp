#include "fuzzyrel/relation.hpp"

#include <algorithm>
#include <set>

namespace fuzzyrel {

namespace {

void require_same_lattice(const FuzzyRelation& r, const FuzzyRelation& s) {
  if (!(r.lattice() == s.lattice())) {
    throw Error(ErrorKind::StructureMismatch, "relations over different lattices: " +
                                                  r.lattice().name() + " and " +
                                                  s.lattice().name());
  }
}

void require_same_shape(const FuzzyRelation& r, const FuzzyRelation& s, const char* op) {
  require_same_lattice(r, s);
  if (r.rows() != s.rows() || r.cols() != s.cols()) {
    throw Error(ErrorKind::ShapeMismatch,
                std::string(op) + ": shapes " + std::to_string(r.rows()) + "x" +
                    std::to_string(r.cols()) + " and " + std::to_string(s.rows()) + "x" +
                    std::to_string(s.cols()) + " differ");
  }
}

void require_square(const FuzzyRelation& r, const char* op) {
  if (!r.is_square()) {
    throw Error(ErrorKind::ShapeMismatch, std::string(op) + " needs a square relation");
  }
}

}  // namespace

Labels numbered_labels(std::size_t n) {
  Labels labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

FuzzyRelation::FuzzyRelation(Unchecked, Lattice lattice, Labels domain, Labels codomain,
                             std::vector<TruthValue> entries)
    : lattice_(lattice),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      entries_(std::move(entries)) {}

FuzzyRelation::FuzzyRelation(Lattice lattice, Labels domain, Labels codomain,
                             std::vector<TruthValue> entries)
    : FuzzyRelation(Unchecked{}, lattice, std::move(domain), std::move(codomain),
                    std::move(entries)) {
  if (domain_.empty() || codomain_.empty()) {
    throw Error(ErrorKind::ShapeMismatch, "relations need non-empty domain and codomain");
  }
  if (entries_.size() != rows() * cols()) {
    throw Error(ErrorKind::ShapeMismatch,
                "expected " + std::to_string(rows() * cols()) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  for (const auto& v : entries_) lattice_.require(v);
}

FuzzyRelation::FuzzyRelation(Lattice lattice, Labels domain, Labels codomain, Rows rows)
    : FuzzyRelation(Unchecked{}, lattice, std::move(domain), std::move(codomain), {}) {
  if (domain_.empty() || codomain_.empty()) {
    throw Error(ErrorKind::ShapeMismatch, "relations need non-empty domain and codomain");
  }
  if (rows.size() != domain_.size()) {
    throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(domain_.size()) +
                                              " rows, got " + std::to_string(rows.size()));
  }
  entries_.reserve(this->rows() * cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols()) {
      throw Error(ErrorKind::ShapeMismatch,
                  "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(cols()));
    }
    for (auto& v : rows[i]) {
      lattice_.require(v);
      entries_.push_back(std::move(v));
    }
  }
}

FuzzyRelation FuzzyRelation::generate(
    const Lattice& lattice, Labels domain, Labels codomain,
    const std::function<TruthValue(std::size_t, std::size_t)>& f) {
  if (domain.empty() || codomain.empty()) {
    throw Error(ErrorKind::ShapeMismatch, "relations need non-empty domain and codomain");
  }
  std::vector<TruthValue> entries;
  entries.reserve(domain.size() * codomain.size());
  for (std::size_t a = 0; a < domain.size(); ++a) {
    for (std::size_t b = 0; b < codomain.size(); ++b) entries.push_back(f(a, b));
  }
  return FuzzyRelation(Unchecked{}, lattice, std::move(domain), std::move(codomain),
                       std::move(entries));
}

FuzzyRelation FuzzyRelation::identity(const Lattice& lattice, Labels labels) {
  Labels copy = labels;
  return generate(lattice, std::move(labels), std::move(copy),
                  [](std::size_t a, std::size_t b) { return TruthValue(a == b ? 1 : 0); });
}

FuzzyRelation FuzzyRelation::universal(const Lattice& lattice, Labels domain,
                                       Labels codomain) {
  return generate(lattice, std::move(domain), std::move(codomain),
                  [](std::size_t, std::size_t) { return TruthValue::one(); });
}

FuzzyRelation FuzzyRelation::empty(const Lattice& lattice, Labels domain, Labels codomain) {
  return generate(lattice, std::move(domain), std::move(codomain),
                  [](std::size_t, std::size_t) { return TruthValue::zero(); });
}

FuzzyRelation::Rows FuzzyRelation::to_rows() const {
  Rows out(rows());
  for (std::size_t a = 0; a < rows(); ++a) {
    out[a].assign(entries_.begin() + static_cast<std::ptrdiff_t>(a * cols()),
                  entries_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols()));
  }
  return out;
}

FuzzyRelation FuzzyRelation::relabeled(Labels domain, Labels codomain) const {
  if (domain.size() != rows() || codomain.size() != cols()) {
    throw Error(ErrorKind::ShapeMismatch, "relabel: label counts do not match the matrix");
  }
  return FuzzyRelation(Unchecked{}, lattice_, std::move(domain), std::move(codomain),
                       entries_);
}

bool leq(const FuzzyRelation& r, const FuzzyRelation& s) {
  require_same_shape(r, s, "leq");
  for (std::size_t i = 0; i < r.entries().size(); ++i) {
    if (s.entries()[i] < r.entries()[i]) return false;
  }
  return true;
}

std::vector<TruthValue> image(const FuzzyRelation& r) {
  const std::set<TruthValue> values(r.entries().begin(), r.entries().end());
  return {values.begin(), values.end()};
}

bool is_crisp(const FuzzyRelation& r) {
  return std::all_of(r.entries().begin(), r.entries().end(), [](const TruthValue& v) {
    return v == TruthValue::zero() || v == TruthValue::one();
  });
}

FuzzyRelation compose(const FuzzyRelation& r, const FuzzyRelation& s) {
  require_same_lattice(r, s);
  if (r.cols() != s.rows()) {
    throw Error(ErrorKind::ShapeMismatch,
                "compose: " + std::to_string(r.rows()) + "x" + std::to_string(r.cols()) +
                    " with " + std::to_string(s.rows()) + "x" + std::to_string(s.cols()));
  }
  const Lattice& lat = r.lattice();
  return FuzzyRelation::generate(lat, r.domain(), s.codomain(),
                                 [&](std::size_t a, std::size_t c) {
                                   TruthValue acc = lat.bottom();
                                   for (std::size_t b = 0; b < r.cols(); ++b) {
                                     TruthValue t = lat.tensor(r(a, b), s(b, c));
                                     if (acc < t) acc = std::move(t);
                                   }
                                   return acc;
                                 });
}

FuzzyRelation converse(const FuzzyRelation& r) {
  return FuzzyRelation::generate(r.lattice(), r.codomain(), r.domain(),
                                 [&](std::size_t b, std::size_t a) { return r(a, b); });
}

FuzzyRelation right_residual(const FuzzyRelation& z, const FuzzyRelation& v) {
  require_same_lattice(z, v);
  require_square(v, "right residual");
  if (v.rows() != z.rows()) {
    throw Error(ErrorKind::ShapeMismatch, "right residual: V must be square on Z's domain");
  }
  const Lattice& lat = z.lattice();
  return FuzzyRelation::generate(lat, z.domain(), z.codomain(),
                                 [&](std::size_t a, std::size_t b) {
                                   TruthValue acc = lat.top();
                                   for (std::size_t a2 = 0; a2 < z.rows(); ++a2) {
                                     TruthValue t = lat.implies(v(a2, a), z(a2, b));
                                     if (t < acc) acc = std::move(t);
                                   }
                                   return acc;
                                 });
}

FuzzyRelation left_residual(const FuzzyRelation& z, const FuzzyRelation& w) {
  require_same_lattice(z, w);
  require_square(w, "left residual");
  if (w.rows() != z.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "left residual: W must be square on Z's codomain");
  }
  const Lattice& lat = z.lattice();
  return FuzzyRelation::generate(lat, z.domain(), z.codomain(),
                                 [&](std::size_t a, std::size_t b) {
                                   TruthValue acc = lat.top();
                                   for (std::size_t b2 = 0; b2 < z.cols(); ++b2) {
                                     TruthValue t = lat.implies(w(b, b2), z(a, b2));
                                     if (t < acc) acc = std::move(t);
                                   }
                                   return acc;
                                 });
}

FuzzyRelation meet(const FuzzyRelation& r, const FuzzyRelation& s) {
  require_same_shape(r, s, "meet");
  return FuzzyRelation::generate(r.lattice(), r.domain(), r.codomain(),
                                 [&](std::size_t a, std::size_t b) {
                                   return r.lattice().meet(r(a, b), s(a, b));
                                 });
}

FuzzyRelation join(const FuzzyRelation& r, const FuzzyRelation& s) {
  require_same_shape(r, s, "join");
  return FuzzyRelation::generate(r.lattice(), r.domain(), r.codomain(),
                                 [&](std::size_t a, std::size_t b) {
                                   return r.lattice().join(r(a, b), s(a, b));
                                 });
}

FuzzyRelation crisp_part(const FuzzyRelation& r) {
  return FuzzyRelation::generate(r.lattice(), r.domain(), r.codomain(),
                                 [&](std::size_t a, std::size_t b) {
                                   return TruthValue(r(a, b) == TruthValue::one() ? 1 : 0);
                                 });
}

bool is_reflexive(const FuzzyRelation& r) {
  require_square(r, "is_reflexive");
  for (std::size_t a = 0; a < r.rows(); ++a) {
    if (r(a, a) != TruthValue::one()) return false;
  }
  return true;
}

bool is_symmetric(const FuzzyRelation& r) {
  require_square(r, "is_symmetric");
  for (std::size_t a = 0; a < r.rows(); ++a) {
    for (std::size_t b = a + 1; b < r.cols(); ++b) {
      if (r(a, b) != r(b, a)) return false;
    }
  }
  return true;
}

bool is_transitive(const FuzzyRelation& r) {
  require_square(r, "is_transitive");
  return leq(compose(r, r), r);
}

bool is_equivalence(const FuzzyRelation& r) {
  return r.is_square() && is_reflexive(r) && is_symmetric(r) && is_transitive(r);
}

FuzzyEquivalence::FuzzyEquivalence(FuzzyRelation base) : base_(std::move(base)) {
  if (!base_.is_square()) {
    throw Error(ErrorKind::NotAnEquivalence, "a fuzzy equivalence must be square");
  }
  if (!is_reflexive(base_)) throw Error(ErrorKind::NotAnEquivalence, "relation is not reflexive");
  if (!is_symmetric(base_)) throw Error(ErrorKind::NotAnEquivalence, "relation is not symmetric");
  if (!is_transitive(base_)) {
    throw Error(ErrorKind::NotAnEquivalence, "relation is not transitive");
  }
}

FuzzyEquivalence FuzzyEquivalence::identity(const Lattice& lattice, Labels labels) {
  return FuzzyEquivalence(FuzzyRelation::identity(lattice, std::move(labels)));
}

FuzzyEquivalence FuzzyEquivalence::universal(const Lattice& lattice, Labels labels) {
  Labels copy = labels;
  return FuzzyEquivalence(FuzzyRelation::universal(lattice, std::move(labels), std::move(copy)));
}

FuzzyEquivalence kernel(const FuzzyRelation& r) {
  const Lattice& lat = r.lattice();
  return FuzzyEquivalence(FuzzyRelation::generate(
      lat, r.domain(), r.domain(), [&](std::size_t a1, std::size_t a2) {
        TruthValue acc = lat.top();
        for (std::size_t b = 0; b < r.cols(); ++b) {
          TruthValue t = lat.equiv(r(a1, b), r(a2, b));
          if (t < acc) acc = std::move(t);
        }
        return acc;
      }));
}

FuzzyEquivalence cokernel(const FuzzyRelation& r) { return kernel(converse(r)); }

bool is_extensional(const FuzzyRelation& r, const FuzzyRelation& e, const FuzzyRelation& f) {
  require_square(e, "is_extensional");
  require_square(f, "is_extensional");
  if (e.rows() != r.rows() || f.rows() != r.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "is_extensional: equivalences do not fit R");
  }
  return leq(compose(e, r), r) && leq(compose(r, f), r);
}

bool is_partial_fuzzy_function(const FuzzyRelation& r) {
  return leq(compose(compose(r, converse(r)), r), r);
}

bool is_l_function(const FuzzyRelation& r) {
  for (std::size_t a = 0; a < r.rows(); ++a) {
    bool found = false;
    for (std::size_t b = 0; b < r.cols() && !found; ++b) found = r(a, b) == TruthValue::one();
    if (!found) return false;
  }
  return true;
}

bool is_surjective(const FuzzyRelation& r) { return is_l_function(converse(r)); }

bool is_uniform(const FuzzyRelation& r) {
  return is_l_function(r) && is_surjective(r) && compose(compose(r, converse(r)), r) == r;
}

std::vector<std::size_t> crisp_description(const FuzzyRelation& r) {
  std::vector<std::size_t> psi(r.rows());
  for (std::size_t a = 0; a < r.rows(); ++a) {
    std::size_t b = 0;
    while (b < r.cols() && r(a, b) != TruthValue::one()) ++b;
    if (b == r.cols()) {
      throw Error(ErrorKind::NotAnLFunction,
                  "row '" + r.domain()[a] + "' has no entry equal to 1");
    }
    psi[a] = b;
  }
  return psi;
}

}  // namespace fuzzyrel
