#include "fuzzyrel/solver.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <stdexcept>

namespace fuzzyrel {

SystemKind::SystemKind(Family family, int variant) : family(family), variant(variant) {
  if (variant < 1 || variant > 6) {
    throw Error(ErrorKind::PreconditionViolation,
                "system variant must be in 1..6, got " + std::to_string(variant));
  }
}

SystemKind SystemKind::parse(std::string_view text) {
  if (text.size() == 5 && text.starts_with("wl") && text[3] == '-' &&
      (text[2] == '1' || text[2] == '2') && text[4] >= '1' && text[4] <= '6') {
    return SystemKind(text[2] == '1' ? Family::Homogeneous : Family::Heterogeneous,
                      text[4] - '0');
  }
  throw Error(ErrorKind::Parse, "unknown system variant '" + std::string(text) +
                                    "' (expected wl1-1 … wl1-6 or wl2-1 … wl2-6)");
}

std::string SystemKind::name() const {
  return std::string(family == Family::Homogeneous ? "wl1-" : "wl2-") +
         std::to_string(variant);
}

const char* to_string(SolveStatus status) {
  return status == SolveStatus::Stabilized ? "stabilized" : "cap_reached";
}

WeaklyLinearSystem::WeaklyLinearSystem(SystemKind kind, std::vector<FuzzyRelation> v,
                                       std::vector<FuzzyRelation> w, FuzzyRelation bound)
    : kind_(kind), v_(std::move(v)), w_(std::move(w)), bound_(std::move(bound)) {
  const Lattice& lat = bound_.lattice();
  auto check = [&](const FuzzyRelation& r, std::size_t n, const char* what, std::size_t i) {
    if (!(r.lattice() == lat)) {
      throw Error(ErrorKind::StructureMismatch, std::string(what) + std::to_string(i + 1) +
                                                    " uses lattice " + r.lattice().name() +
                                                    ", bound uses " + lat.name());
    }
    if (r.rows() != n || r.cols() != n) {
      throw Error(ErrorKind::ShapeMismatch, std::string(what) + std::to_string(i + 1) +
                                                " must be " + std::to_string(n) + "x" +
                                                std::to_string(n));
    }
  };
  if (v_.size() != w_.size()) {
    throw Error(ErrorKind::ShapeMismatch, "families {V_i} and {W_i} have different index sets");
  }
  for (std::size_t i = 0; i < v_.size(); ++i) check(v_[i], bound_.rows(), "V", i);
  for (std::size_t i = 0; i < w_.size(); ++i) check(w_[i], bound_.cols(), "W", i);
}

WeaklyLinearSystem WeaklyLinearSystem::heterogeneous(int variant, std::vector<FuzzyRelation> v,
                                                     std::vector<FuzzyRelation> w,
                                                     FuzzyRelation z) {
  return WeaklyLinearSystem(SystemKind(Family::Heterogeneous, variant), std::move(v),
                            std::move(w), std::move(z));
}

WeaklyLinearSystem WeaklyLinearSystem::homogeneous(int variant, std::vector<FuzzyRelation> v,
                                                   FuzzyRelation w) {
  if (!w.is_square()) throw Error(ErrorKind::ShapeMismatch, "bound W must be square");
  auto copy = v;
  return WeaklyLinearSystem(SystemKind(Family::Homogeneous, variant), std::move(v),
                            std::move(copy), std::move(w));
}

WeaklyLinearSystem WeaklyLinearSystem::with_variant(int variant) const {
  WeaklyLinearSystem copy = *this;
  copy.kind_ = SystemKind(kind_.family, variant);
  return copy;
}

namespace {

using Family_ = std::vector<FuzzyRelation>;

// ⋀_i [(W_i∘R⁻¹)\V_i]⁻¹
FuzzyRelation phi1_block(const Family_& v, const Family_& w, const FuzzyRelation& r) {
  std::optional<FuzzyRelation> acc;
  const FuzzyRelation r_inv = converse(r);
  for (std::size_t i = 0; i < v.size(); ++i) {
    FuzzyRelation term = converse(left_residual(compose(w[i], r_inv), v[i]));
    acc = acc ? meet(*acc, term) : std::move(term);
  }
  return acc ? *acc : FuzzyRelation::universal(r.lattice(), r.domain(), r.codomain());
}

// ⋀_i (R∘W_i)/V_i
FuzzyRelation phi2_block(const Family_& v, const Family_& w, const FuzzyRelation& r) {
  std::optional<FuzzyRelation> acc;
  for (std::size_t i = 0; i < v.size(); ++i) {
    FuzzyRelation term = right_residual(compose(r, w[i]), v[i]);
    acc = acc ? meet(*acc, term) : std::move(term);
  }
  return acc ? *acc : FuzzyRelation::universal(r.lattice(), r.domain(), r.codomain());
}

// (a,b) ∈ (φ1)^c(ρ) ⇔ ∀i ∀a': V_i(a,a') ≤ (W_i∘ρ⁻¹)(b,a')
FuzzyRelation phi1_crisp_block(const Family_& v, const Family_& w, const FuzzyRelation& rho) {
  const FuzzyRelation rho_inv = converse(rho);
  std::vector<FuzzyRelation> wr;
  for (std::size_t i = 0; i < v.size(); ++i) wr.push_back(compose(w[i], rho_inv));
  return FuzzyRelation::generate(
      rho.lattice(), rho.domain(), rho.codomain(), [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < v.size(); ++i) {
          for (std::size_t a2 = 0; a2 < rho.rows(); ++a2) {
            if (wr[i](b, a2) < v[i](a, a2)) return TruthValue::zero();
          }
        }
        return TruthValue::one();
      });
}

// (a,b) ∈ (φ2)^c(ρ) ⇔ ∀i ∀a': V_i(a',a) ≤ (ρ∘W_i)(a',b)
FuzzyRelation phi2_crisp_block(const Family_& v, const Family_& w, const FuzzyRelation& rho) {
  std::vector<FuzzyRelation> rw;
  for (std::size_t i = 0; i < v.size(); ++i) rw.push_back(compose(rho, w[i]));
  return FuzzyRelation::generate(
      rho.lattice(), rho.domain(), rho.codomain(), [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < v.size(); ++i) {
          for (std::size_t a2 = 0; a2 < rho.rows(); ++a2) {
            if (rw[i](a2, b) < v[i](a2, a)) return TruthValue::zero();
          }
        }
        return TruthValue::one();
      });
}

using Block = FuzzyRelation (*)(const Family_&, const Family_&, const FuzzyRelation&);

// Evaluates a meet of heterogeneous φ operators on one R. The four building
// blocks φ1(R), φ2(R), [φ1'(R⁻¹)]⁻¹, [φ2'(R⁻¹)]⁻¹ (primes: A and B swapped)
// are computed at most once.
FuzzyRelation combined_phi(const Family_& v, const Family_& w, const std::vector<int>& variants,
                           const FuzzyRelation& r, Block first, Block second) {
  std::optional<FuzzyRelation> p1, p2, q1, q2;
  std::optional<FuzzyRelation> r_inv;
  auto inv = [&]() -> const FuzzyRelation& {
    if (!r_inv) r_inv = converse(r);
    return *r_inv;
  };
  auto get_p1 = [&]() -> const FuzzyRelation& {
    if (!p1) p1 = first(v, w, r);
    return *p1;
  };
  auto get_p2 = [&]() -> const FuzzyRelation& {
    if (!p2) p2 = second(v, w, r);
    return *p2;
  };
  auto get_q1 = [&]() -> const FuzzyRelation& {
    if (!q1) q1 = converse(first(w, v, inv()));
    return *q1;
  };
  auto get_q2 = [&]() -> const FuzzyRelation& {
    if (!q2) q2 = converse(second(w, v, inv()));
    return *q2;
  };

  std::optional<FuzzyRelation> acc;
  auto add = [&](const FuzzyRelation& term) { acc = acc ? meet(*acc, term) : term; };
  for (int t : variants) {
    switch (t) {
      case 1: add(get_p1()); break;
      case 2: add(get_p2()); break;
      case 3: add(get_p1()); add(get_q1()); break;
      case 4: add(get_p2()); add(get_q2()); break;
      case 5: add(get_p2()); add(get_q1()); break;
      case 6: add(get_p1()); add(get_q2()); break;
      default: throw std::logic_error("bad variant");
    }
  }
  return *acc;
}

// Every system is solved as a heterogeneous one: U ≤ φ(U), U ≤ Z with φ a
// meet of heterogeneous operators. wl1-1 is solved on converses.
struct Plan {
  Family_ v;
  Family_ w;
  FuzzyRelation bound;
  std::vector<int> variants;
  bool transposed = false;
};

Family_ conversed(const Family_& family) {
  Family_ out;
  for (const auto& r : family) out.push_back(converse(r));
  return out;
}

Plan make_plan(const WeaklyLinearSystem& system, int variant) {
  const auto& v = system.v_relations();
  const auto& w = system.w_relations();
  const FuzzyRelation& z = system.bound();
  if (system.kind().family == Family::Heterogeneous) return Plan{v, w, z, {variant}, false};

  const FuzzyRelation sym = meet(z, converse(z));
  switch (variant) {
    case 1: {
      Family_ vi = conversed(v);
      return Plan{vi, vi, converse(z), {2}, true};
    }
    case 2: return Plan{v, v, z, {2}, false};
    case 3: return Plan{v, v, z, {5}, false};
    case 4: return Plan{v, v, sym, {3}, false};
    case 5: return Plan{v, v, sym, {4}, false};
    case 6: return Plan{v, v, sym, {5, 6}, false};
    default: throw std::logic_error("bad variant");
  }
}

void require_unknown_shape(const WeaklyLinearSystem& system, const FuzzyRelation& r) {
  if (!(r.lattice() == system.lattice())) {
    throw Error(ErrorKind::StructureMismatch, "relation lattice " + r.lattice().name() +
                                                  " differs from system lattice " +
                                                  system.lattice().name());
  }
  if (r.rows() != system.bound().rows() || r.cols() != system.bound().cols()) {
    throw Error(ErrorKind::ShapeMismatch,
                "unknown must be " + std::to_string(system.bound().rows()) + "x" +
                    std::to_string(system.bound().cols()));
  }
}

FuzzyRelation plan_phi(const Plan& plan, const FuzzyRelation& r) {
  return combined_phi(plan.v, plan.w, plan.variants, r, &phi1_block, &phi2_block);
}

FuzzyRelation plan_phi_crisp(const Plan& plan, const FuzzyRelation& rho) {
  return combined_phi(plan.v, plan.w, plan.variants, rho, &phi1_crisp_block,
                      &phi2_crisp_block);
}

template <class Step>
SolveReport iterate(const WeaklyLinearSystem& system, const Plan& plan, FuzzyRelation start,
                    std::size_t cap, Step step) {
  if (cap < 1) throw Error(ErrorKind::PreconditionViolation, "max_iterations must be >= 1");
  FuzzyRelation current = std::move(start);
  SolveReport report{current, 0, SolveStatus::CapReached, false};
  for (std::size_t k = 1;; ++k) {
    FuzzyRelation next = meet(current, step(plan, current));
    if (next == current) {
      report.iterations = k;
      report.status = SolveStatus::Stabilized;
      break;
    }
    current = std::move(next);
    if (k == cap) {
      report.iterations = cap;
      break;
    }
  }
  FuzzyRelation solution = plan.transposed ? converse(current) : current;
  report.solution = solution.relabeled(system.a_labels(), system.b_labels());
  report.verified = verify_solution(system, report.solution);
  return report;
}

bool leq_all(const Family_& lhs, const Family_& rhs) {
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!leq(lhs[i], rhs[i])) return false;
  }
  return true;
}

// For U ∈ R(A,B): U⁻¹∘V_i ≤ W_i∘U⁻¹ style checks, evaluated per i.
bool hetero_direct(int variant, const Family_& v, const Family_& w, const FuzzyRelation& u) {
  const FuzzyRelation u_inv = converse(u);
  Family_ uv, wu, vu, uw;  // U⁻¹∘V_i, W_i∘U⁻¹, V_i∘U, U∘W_i
  for (std::size_t i = 0; i < v.size(); ++i) {
    uv.push_back(compose(u_inv, v[i]));
    wu.push_back(compose(w[i], u_inv));
    vu.push_back(compose(v[i], u));
    uw.push_back(compose(u, w[i]));
  }
  switch (variant) {
    case 1: return leq_all(uv, wu);
    case 2: return leq_all(vu, uw);
    case 3: return leq_all(uv, wu) && leq_all(uw, vu);
    case 4: return leq_all(vu, uw) && leq_all(wu, uv);
    case 5: return vu == uw;
    case 6: return uv == wu;
    default: throw std::logic_error("bad variant");
  }
}

// For U ∈ R(A): U∘V_i ≤ V_i∘U style checks.
bool homo_direct_one(int base_variant, const Family_& v, const FuzzyRelation& u) {
  Family_ uv, vu;
  for (const auto& vi : v) {
    uv.push_back(compose(u, vi));
    vu.push_back(compose(vi, u));
  }
  switch (base_variant) {
    case 1: return leq_all(uv, vu);
    case 2: return leq_all(vu, uv);
    case 3: return uv == vu;
    default: throw std::logic_error("bad variant");
  }
}

}  // namespace

FuzzyRelation phi(const WeaklyLinearSystem& system, int variant, const FuzzyRelation& r) {
  require_unknown_shape(system, r);
  const Plan plan = make_plan(system, SystemKind(system.kind().family, variant).variant);
  if (plan.transposed) return converse(plan_phi(plan, converse(r))).relabeled(r.domain(), r.codomain());
  return plan_phi(plan, r);
}

FuzzyRelation phi(const WeaklyLinearSystem& system, const FuzzyRelation& r) {
  return phi(system, system.kind().variant, r);
}

FuzzyRelation phi_crisp(const WeaklyLinearSystem& system, int variant, const FuzzyRelation& rho) {
  require_unknown_shape(system, rho);
  if (!is_crisp(rho)) throw Error(ErrorKind::PreconditionViolation, "phi_crisp needs a crisp relation");
  const Plan plan = make_plan(system, SystemKind(system.kind().family, variant).variant);
  if (plan.transposed) {
    return converse(plan_phi_crisp(plan, converse(rho))).relabeled(rho.domain(), rho.codomain());
  }
  return plan_phi_crisp(plan, rho);
}

FuzzyRelation phi_crisp(const WeaklyLinearSystem& system, const FuzzyRelation& rho) {
  return phi_crisp(system, system.kind().variant, rho);
}

FuzzyRelation effective_bound(const WeaklyLinearSystem& system) {
  const FuzzyRelation& z = system.bound();
  if (system.kind().family == Family::Homogeneous && system.kind().variant >= 4) {
    return meet(z, converse(z));
  }
  return z;
}

SolveReport solve_greatest(const WeaklyLinearSystem& system, const SolveOptions& options) {
  const Plan plan = make_plan(system, system.kind().variant);
  return iterate(system, plan, plan.bound, options.max_iterations, &plan_phi);
}

SolveReport solve_greatest_crisp(const WeaklyLinearSystem& system) {
  const Plan plan = make_plan(system, system.kind().variant);
  // At most |A|·|B| strict decreases before ρ stabilizes.
  const std::size_t cap = plan.bound.rows() * plan.bound.cols() + 1;
  return iterate(system, plan, crisp_part(plan.bound), cap, &plan_phi_crisp);
}

bool satisfies_system(const WeaklyLinearSystem& system, const FuzzyRelation& r) {
  require_unknown_shape(system, r);
  const int t = system.kind().variant;
  if (system.kind().family == Family::Heterogeneous) {
    return leq(r, system.bound()) &&
           hetero_direct(t, system.v_relations(), system.w_relations(), r);
  }
  const auto& v = system.v_relations();
  const FuzzyRelation& w = system.bound();
  if (!leq(r, w)) return false;
  if (t <= 3) return homo_direct_one(t, v, r);
  const FuzzyRelation r_inv = converse(r);
  return leq(r_inv, w) && homo_direct_one(t - 3, v, r) && homo_direct_one(t - 3, v, r_inv);
}

bool verify_solution(const WeaklyLinearSystem& system, const FuzzyRelation& r) {
  const bool direct = satisfies_system(system, r);
  const bool fixpoint_form = leq(r, effective_bound(system)) && leq(r, phi(system, r));
  if (direct != fixpoint_form) {
    throw std::logic_error("verify_solution: direct check and phi form disagree for " +
                           system.kind().name());
  }
  return direct;
}

std::vector<TruthValue> system_values(const WeaklyLinearSystem& system) {
  std::set<TruthValue> seeds;
  auto add = [&](const FuzzyRelation& r) { seeds.insert(r.entries().begin(), r.entries().end()); };
  add(system.bound());
  for (const auto& r : system.v_relations()) add(r);
  for (const auto& r : system.w_relations()) add(r);
  return {seeds.begin(), seeds.end()};
}

TerminationPrediction predict_termination(const WeaklyLinearSystem& system, std::size_t cap) {
  const auto seeds = system_values(system);
  const SubalgebraResult closure = generated_subalgebra(system.lattice(), seeds, cap);
  if (!closure.finite) return {};
  return {true, closure.elements.size()};
}

}  // namespace fuzzyrel
