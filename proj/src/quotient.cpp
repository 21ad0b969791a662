#include "fuzzyrel/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzzyrel {

FuzzyRelationalSystem::FuzzyRelationalSystem(Lattice lattice, Labels carrier,
                                             std::vector<FuzzyRelation> relations)
    : lattice_(lattice), carrier_(std::move(carrier)), relations_(std::move(relations)) {
  if (carrier_.empty()) throw Error(ErrorKind::ShapeMismatch, "empty carrier");
  for (const auto& r : relations_) {
    if (!(r.lattice() == lattice_)) {
      throw Error(ErrorKind::StructureMismatch, "relation over " + r.lattice().name() +
                                                    " in a system over " + lattice_.name());
    }
    if (r.rows() != carrier_.size() || r.cols() != carrier_.size()) {
      throw Error(ErrorKind::ShapeMismatch, "system relations must be square on the carrier");
    }
  }
}

FactorSet::FactorSet(const FuzzyEquivalence& e)
    : source_(e.relation().domain()), class_of_(e.size()) {
  const FuzzyRelation& r = e.relation();
  for (std::size_t a = 0; a < e.size(); ++a) {
    auto same_row = [&](const std::vector<std::size_t>& cls) {
      const std::size_t rep = cls.front();
      for (std::size_t b = 0; b < r.cols(); ++b) {
        if (r(a, b) != r(rep, b)) return false;
      }
      return true;
    };
    const auto it = std::find_if(classes_.begin(), classes_.end(), same_row);
    if (it == classes_.end()) {
      class_of_[a] = classes_.size();
      classes_.push_back({a});
    } else {
      class_of_[a] = static_cast<std::size_t>(it - classes_.begin());
      it->push_back(a);
    }
  }
}

Labels FactorSet::labels() const {
  Labels out;
  for (const auto& cls : classes_) {
    if (cls.size() == 1) {
      out.push_back(source_[cls.front()]);
      continue;
    }
    std::string label = "{";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) label += ",";
      label += source_[cls[i]];
    }
    out.push_back(label + "}");
  }
  return out;
}

namespace {

// Collapses an A×A relation to A/E×A/E on representatives, checking that
// every member pair agrees.
FuzzyRelation collapse(const FuzzyRelation& full, const FactorSet& factor, const char* what) {
  for (std::size_t a1 = 0; a1 < full.rows(); ++a1) {
    for (std::size_t a2 = 0; a2 < full.cols(); ++a2) {
      const std::size_t r1 = factor.representative(factor.class_of(a1));
      const std::size_t r2 = factor.representative(factor.class_of(a2));
      if (full(a1, a2) != full(r1, r2)) {
        throw std::logic_error(std::string(what) + " is not well defined on classes");
      }
    }
  }
  return FuzzyRelation::generate(full.lattice(), factor.labels(), factor.labels(),
                                 [&](std::size_t c1, std::size_t c2) {
                                   return full(factor.representative(c1),
                                               factor.representative(c2));
                                 });
}

// A×A relation to A×A/E on column representatives.
FuzzyRelation collapse_columns(const FuzzyRelation& full, const FactorSet& factor,
                               const char* what) {
  for (std::size_t a1 = 0; a1 < full.rows(); ++a1) {
    for (std::size_t a2 = 0; a2 < full.cols(); ++a2) {
      if (full(a1, a2) != full(a1, factor.representative(factor.class_of(a2)))) {
        throw std::logic_error(std::string(what) + " is not well defined on classes");
      }
    }
  }
  return FuzzyRelation::generate(full.lattice(), full.domain(), factor.labels(),
                                 [&](std::size_t a, std::size_t c) {
                                   return full(a, factor.representative(c));
                                 });
}

void require_below(const FuzzyEquivalence& e, const FuzzyEquivalence& f) {
  if (e.size() != f.size() || !leq(e.relation(), f.relation())) {
    throw Error(ErrorKind::PreconditionViolation, "E ≤ F is required");
  }
}

}  // namespace

QuotientSystem quotient_system(const FuzzyRelationalSystem& sys, const FuzzyEquivalence& e) {
  if (e.size() != sys.size() || !(e.relation().lattice() == sys.lattice())) {
    throw Error(ErrorKind::ShapeMismatch, "equivalence does not fit the system carrier");
  }
  FactorSet factor(e);
  std::vector<FuzzyRelation> quotients;
  for (const auto& v : sys.relations()) {
    quotients.push_back(collapse(compose(compose(e, v), e), factor, "E∘V∘E"));
  }
  FuzzyRelationalSystem out(sys.lattice(), factor.labels(), std::move(quotients));
  return QuotientSystem{std::move(factor), std::move(out)};
}

FuzzyRelation natural_map(const FuzzyEquivalence& e) {
  return collapse_columns(e.relation(), FactorSet(e), "natural map");
}

FuzzyEquivalence relative_quotient(const FuzzyEquivalence& f, const FuzzyEquivalence& e) {
  require_below(e, f);
  return FuzzyEquivalence(collapse(f.relation(), FactorSet(e), "F/E"));
}

FuzzyRelation lift(const FuzzyEquivalence& f, const FuzzyEquivalence& e) {
  require_below(e, f);
  return collapse_columns(f.relation(), FactorSet(e), "F_E");
}

InducedBijection induced_bijection(const FuzzyRelation& r) {
  if (!is_uniform(r)) throw Error(ErrorKind::NotUniform, "induced bijection needs a uniform relation");
  InducedBijection out{FactorSet(kernel(r)), FactorSet(cokernel(r)), {}};
  const auto psi = crisp_description(r);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  out.map.assign(out.domain_classes.size(), unset);
  for (std::size_t a = 0; a < r.rows(); ++a) {
    // Every b with R(a,b) = 1 is a choice of ψ(a); all must land in one class.
    for (std::size_t b = 0; b < r.cols(); ++b) {
      if (r(a, b) != TruthValue::one()) continue;
      std::size_t& slot = out.map[out.domain_classes.class_of(a)];
      const std::size_t target = out.codomain_classes.class_of(b);
      if (slot == unset) slot = out.codomain_classes.class_of(psi[a]);
      if (slot != target) throw std::logic_error("induced bijection depends on the choice of psi");
    }
  }
  std::vector<std::size_t> sorted = out.map;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t c = 0; c < sorted.size(); ++c) {
    if (sorted[c] != c || sorted.size() != out.codomain_classes.size()) {
      throw std::logic_error("induced map is not a bijection");
    }
  }
  return out;
}

bool is_isomorphism(const std::vector<std::size_t>& map, const FuzzyRelationalSystem& a,
                    const FuzzyRelationalSystem& b) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  if (a.relations().size() != b.relations().size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (std::size_t x : map) {
    if (x >= b.size() || hit[x]) return false;
    hit[x] = true;
  }
  for (std::size_t i = 0; i < a.relations().size(); ++i) {
    const auto& v = a.relations()[i];
    const auto& w = b.relations()[i];
    for (std::size_t a1 = 0; a1 < a.size(); ++a1) {
      for (std::size_t a2 = 0; a2 < a.size(); ++a2) {
        if (v(a1, a2) != w(map[a1], map[a2])) return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> second_isomorphism_witness(const FuzzyEquivalence& f,
                                                    const FuzzyEquivalence& e) {
  const FactorSet by_f(f);
  const FactorSet by_e(e);
  const FactorSet by_q(relative_quotient(f, e));
  std::vector<std::size_t> map(by_f.size());
  for (std::size_t c = 0; c < by_f.size(); ++c) {
    map[c] = by_q.class_of(by_e.class_of(by_f.representative(c)));
  }
  return map;
}

UniformDecomposition decompose_uniform_solution(const FuzzyRelation& r,
                                                const WeaklyLinearSystem& system) {
  const SystemKind kind = system.kind();
  if (kind.family != Family::Heterogeneous || (kind.variant != 3 && kind.variant != 5)) {
    throw Error(ErrorKind::PreconditionViolation, "decomposition applies to wl2-3 and wl2-5");
  }
  if (!is_uniform(r)) throw Error(ErrorKind::NotUniform, "R is not a uniform fuzzy relation");
  if (!verify_solution(system, r)) throw Error(ErrorKind::NotASolution, "R does not solve the system");

  UniformDecomposition out{kernel(r), cokernel(r), induced_bijection(r)};
  const FuzzyRelation& z = system.bound();
  const auto lhs = WeaklyLinearSystem::homogeneous(4, system.v_relations(),
                                                   compose(z, converse(z)));
  const auto rhs = WeaklyLinearSystem::homogeneous(kind.variant == 3 ? 4 : 5,
                                                   system.w_relations(),
                                                   compose(converse(z), z));
  if (!verify_solution(lhs, out.kernel)) throw std::logic_error("kernel does not solve wl1-4");
  if (!verify_solution(rhs, out.cokernel)) {
    throw std::logic_error("co-kernel does not solve " + rhs.kind().name());
  }
  const FuzzyRelationalSystem sys_a(z.lattice(), z.domain(), system.v_relations());
  const FuzzyRelationalSystem sys_b(z.lattice(), z.codomain(), system.w_relations());
  if (!is_isomorphism(out.iso.map, quotient_system(sys_a, out.kernel).system,
                      quotient_system(sys_b, out.cokernel).system)) {
    throw std::logic_error("induced bijection is not an isomorphism of the quotient systems");
  }
  return out;
}

FuzzyRelation reconstruct_uniform(const FuzzyEquivalence& e, const FuzzyEquivalence& f,
                                  const std::vector<std::size_t>& map) {
  const FactorSet by_e(e);
  const FactorSet by_f(f);
  if (map.size() != by_e.size()) {
    throw Error(ErrorKind::ShapeMismatch, "class map does not cover A/E");
  }
  for (std::size_t c : map) {
    if (c >= by_f.size()) throw Error(ErrorKind::ShapeMismatch, "class map leaves B/F");
  }
  const FuzzyRelation& fr = f.relation();
  FuzzyRelation r = FuzzyRelation::generate(
      fr.lattice(), e.relation().domain(), fr.domain(), [&](std::size_t a, std::size_t b) {
        return fr(by_f.representative(map[by_e.class_of(a)]), b);
      });
  if (!(kernel(r).relation() == e.relation()) || !(cokernel(r).relation() == fr)) {
    throw Error(ErrorKind::PreconditionViolation,
                "E(a1,a2) = F(psi(a1),psi(a2)) fails for the given class map");
  }
  return r;
}

}  // namespace fuzzyrel
