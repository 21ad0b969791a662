#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace testing;

namespace {

constexpr double kFastSeconds = 1.0;
constexpr double kSlowSeconds = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts checks and violations, keeping the first few failure notes.
class Tally {
 public:
  void check(bool ok, const std::string& note = {}) {
    ++checks_;
    if (!ok) {
      ++violations_;
      if (notes_.size() < 3 && !note.empty()) notes_.push_back(note);
    }
  }
  std::size_t checks() const { return checks_; }
  std::size_t violations() const { return violations_; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks, " << violations_ << " violations";
    for (const auto& n : notes_) os << "; " << n;
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t violations_ = 0;
  std::vector<std::string> notes_;
};

std::string show(const FuzzyRelation& r) {
  std::string s = "[";
  for (std::size_t a = 0; a < r.rows(); ++a) {
    s += a ? ",[" : "[";
    for (std::size_t b = 0; b < r.cols(); ++b) s += (b ? "," : "") + r(a, b).to_string();
    s += "]";
  }
  return s + "]";
}

std::vector<FuzzyRelation> converses(const std::vector<FuzzyRelation>& rs) {
  std::vector<FuzzyRelation> out;
  for (const auto& r : rs) out.push_back(converse(r));
  return out;
}

FuzzyRelationalSystem system_on(const std::vector<FuzzyRelation>& v) {
  return FuzzyRelationalSystem(v.front().lattice(), v.front().domain(), v);
}

WeaklyLinearSystem toward_quotient(int variant, const FuzzyRelationalSystem& sys, const QuotientSystem& q,
                                   FuzzyRelation z) {
  std::vector<FuzzyRelation> w;
  for (const auto& r : q.system.relations()) w.push_back(r.relabeled(z.codomain(), z.codomain()));
  return WeaklyLinearSystem::heterogeneous(variant, sys.relations(), std::move(w), std::move(z));
}

FuzzyRelation universal_on(const Lattice& lat, std::size_t n) {
  return FuzzyRelation::universal(lat, numbered_labels(n), numbered_labels(n));
}

std::vector<FuzzyRelation> all_relations(const Lattice& lat, const std::vector<TruthValue>& carrier,
                                         std::size_t rows, std::size_t cols) {
  std::vector<FuzzyRelation> out;
  oracle::enumerate_relations(lat, {carrier, rows, cols}, [&](const FuzzyRelation& r) { out.push_back(r); });
  return out;
}

// All crisp descriptions of an L-function.
std::vector<std::vector<std::size_t>> all_descriptions(const FuzzyRelation& r) {
  std::vector<std::vector<std::size_t>> out = {{}};
  for (std::size_t a = 0; a < r.rows(); ++a) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : out) {
      for (std::size_t b = 0; b < r.cols(); ++b) {
        if (r(a, b) != TruthValue::one()) continue;
        auto p = prefix;
        p.push_back(b);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome published_example() {
  WorkedExample ex;
  Tally t;
  for (int v = 1; v <= 6; ++v) {
    const auto r = solve_greatest(ex.system(v));
    t.check(r.solution == ex.expected[v - 1] && r.status == SolveStatus::Stabilized && r.verified,
            "wl2-" + std::to_string(v) + " gave " + show(r.solution));
  }
  return {t.violations() == 0, t.summary()};
}

Outcome published_crisp() {
  WorkedExample ex;
  Tally t;
  for (int v = 1; v <= 6; ++v) {
    const auto r = solve_greatest_crisp(ex.system(v));
    t.check(is_empty(r.solution), "wl2-" + std::to_string(v) + " gave " + show(r.solution) +
                                      (verify_solution(ex.system(v), r.solution) ? " (verified)" : ""));
  }
  return {t.violations() == 0, t.summary()};
}

Outcome oracle_equivalence() {
  Tally t;
  std::size_t instances = 0;
  for (auto gen : {Gen::chain2(1001), Gen::goedel_half(1002)}) {
    for (int round = 0; round < 25; ++round) {
      const auto base = gen.heterogeneous(1);
      for (int v = 1; v <= 6; ++v) {
        const auto sys = base.with_variant(v);
        const auto solved = solve_greatest(sys).solution;
        const auto brute = oracle::brute_force_greatest(sys);
        t.check(solved == brute, sys.lattice().name() + " wl2-" + std::to_string(v) + " solver " + show(solved) +
                                     " oracle " + show(brute));
        ++instances;
      }
    }
  }
  return {t.violations() == 0 && instances >= 200, std::to_string(instances) + " instances, " + t.summary()};
}

Outcome homogeneous_specialization() {
  Tally t;
  Gen gen = Gen::chain2(2001);
  std::size_t instances = 0;
  for (int round = 0; round < 120; ++round) {
    const int v = round % 6 + 1;
    const auto sys = gen.homogeneous(v, 3, 2);
    const auto solved = solve_greatest(sys).solution;
    FuzzyRelation joined = FuzzyRelation::empty(sys.lattice(), sys.a_labels(), sys.b_labels());
    for (const auto& s : oracle::all_solutions(sys)) joined = join(joined, s);
    t.check(solved == joined, "wl1-" + std::to_string(v) + " solver " + show(solved) + " join " + show(joined));
    t.check(satisfies_system(sys, solved), "wl1-" + std::to_string(v) + " raw inequalities");
    ++instances;

    // Duality on the solver outputs.
    const auto& vs = sys.v_relations();
    const auto w = sys.bound();
    const auto dual_v = converses(vs);
    const auto dual_w = converse(w);
    const auto r1 = solve_greatest(WeaklyLinearSystem::homogeneous(1, vs, w)).solution;
    const auto r2 = solve_greatest(WeaklyLinearSystem::homogeneous(2, dual_v, dual_w)).solution;
    t.check(r2 == converse(r1), "wl1-1/wl1-2 duality");
    t.check(satisfies_system(WeaklyLinearSystem::homogeneous(2, dual_v, dual_w), converse(r1)),
            "converse of wl1-1 output");
    const auto r4 = solve_greatest(WeaklyLinearSystem::homogeneous(4, vs, w)).solution;
    const auto r5 = solve_greatest(WeaklyLinearSystem::homogeneous(5, dual_v, dual_w)).solution;
    t.check(r4 == r5, "wl1-4/wl1-5 duality");
    t.check(satisfies_system(WeaklyLinearSystem::homogeneous(5, dual_v, dual_w), r4), "wl1-4 output in wl1-5");
  }
  return {t.violations() == 0 && instances >= 100, std::to_string(instances) + " instances, " + t.summary()};
}

Outcome algebra_laws() {
  Tally t;
  const Lattice c5 = Lattice::chain(5);
  std::vector<TruthValue> chain;
  for (unsigned k = 0; k <= 5; ++k) chain.push_back(c5.chain_element(k));
  for (const auto& x : chain) {
    t.check(otimes(c5, x, TruthValue::one()) == x, "unit");
    for (const auto& y : chain) {
      t.check(otimes(c5, x, y) == otimes(c5, y, x), "commutativity");
      for (const auto& z : chain) {
        t.check((otimes(c5, x, y) <= z) == (x <= residuum(c5, y, z)), "adjunction");
        t.check(otimes(c5, otimes(c5, x, y), z) == otimes(c5, x, otimes(c5, y, z)), "associativity");
      }
    }
  }

  const std::vector<TruthValue> quarters = {tv("0"), tv("1/4"), tv("1/2"), tv("3/4"), tv("1")};
  for (auto gen : {Gen::chain2(3001), Gen::goedel_half(3002), Gen(Lattice::lukasiewicz(), quarters, 3003),
                   Gen(Lattice::product(), quarters, 3004)}) {
    for (int i = 0; i < 50; ++i) {
      const std::size_t a = gen.between(1, 3), b = gen.between(1, 3), c = gen.between(1, 3), d = gen.between(1, 3);
      const auto r0 = gen.relation(a, b);
      const auto r1 = gen.relation(b, c);
      const auto r2 = join(r1, gen.relation(b, c));
      const auto r3 = gen.relation(c, d);
      const auto s1 = gen.relation(b, c);
      const auto lo = gen.below(r1);
      t.check(compose(compose(r0, r1), r3) == compose(r0, compose(r1, r3)), "associativity of composition");
      t.check(leq(converse(lo), converse(r1)) && leq(compose(r0, lo), compose(r0, r1)) &&
                  leq(compose(lo, r3), compose(r1, r3)),
              "monotonicity");
      t.check(converse(compose(r0, r1)) == compose(converse(r1), converse(r0)), "converse of composition");
      t.check(compose(r0, join(r1, s1)) == join(compose(r0, r1), compose(r0, s1)), "left distributivity");
      t.check(compose(join(r1, s1), r3) == join(compose(r1, r3), compose(s1, r3)), "right distributivity");
      t.check(converse(join(r2, s1)) == join(converse(r2), converse(s1)), "converse of join");
    }
  }

  const Lattice c2 = Lattice::chain(2);
  Gen gen = Gen::chain2(3005);
  for (int i = 0; i < 20; ++i) {
    const std::size_t na = gen.between(1, 2), nb = gen.between(1, 2);
    const auto v = gen.relation(na, na);
    const auto w = gen.relation(nb, nb);
    const auto z = gen.relation(na, nb);
    const auto right = right_residual(z, v);
    const auto left = left_residual(z, w);
    FuzzyRelation join_right = FuzzyRelation::empty(c2, z.domain(), z.codomain());
    FuzzyRelation join_left = join_right;
    for (const auto& u : all_relations(c2, gen.carrier(), na, nb)) {
      const bool vu = leq(compose(v, u), z);
      const bool uw = leq(compose(u, w), z);
      t.check(vu == leq(u, right), "right residual");
      t.check(uw == leq(u, left), "left residual");
      if (vu) join_right = join(join_right, u);
      if (uw) join_left = join(join_left, u);
    }
    t.check(join_right == right && join_left == left, "residual is the greatest solution");
  }
  return {t.violations() == 0, t.summary()};
}

Outcome uniform_suite() {
  Tally t;
  const Lattice c = Lattice::chain(2);
  const std::vector<TruthValue> carrier = {tv("0"), tv("1/2"), tv("1")};
  std::size_t uniform = 0;
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
    for (const auto& r : all_relations(c, carrier, n, m)) {
      const auto inv = converse(r);
      const auto e = kernel(r).relation();
      const auto f = cokernel(r).relation();
      const auto rri = compose(r, inv);
      const auto rir = compose(inv, r);
      const auto rrir = compose(rri, r);

      const bool p3 = leq(rir, f), p4 = leq(rri, e), p5 = leq(rrir, r);
      t.check(p3 == p4 && p4 == p5, "partial function characterization at " + show(r));
      t.check(p5 == is_partial_fuzzy_function(r), "partial function predicate at " + show(r));

      const bool sl = is_l_function(r) && is_surjective(r);
      const bool u3 = sl && rrir == r, u4 = sl && e == rri, u5 = sl && f == rir;
      t.check(u3 == u4 && u4 == u5, "uniform characterization at " + show(r));
      t.check(u3 == is_uniform(r), "uniform predicate at " + show(r));
      t.check(is_uniform(r) == is_uniform(inv), "uniform converse at " + show(r));
      if (!is_l_function(r)) continue;

      const auto descriptions = all_descriptions(r);
      bool u6 = true, u7 = true;
      for (const auto& psi : descriptions) {
        bool onto = true;
        for (std::size_t b = 0; b < m; ++b) {
          bool hit = false;
          for (std::size_t a = 0; a < n; ++a) hit = hit || f(psi[a], b) == TruthValue::one();
          onto = onto && hit;
        }
        u6 = u6 && onto;
        u7 = u7 && onto;
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < m; ++b) u6 = u6 && r(a, b) == f(psi[a], b);
          for (std::size_t a2 = 0; a2 < n; ++a2) u7 = u7 && r(a, psi[a2]) == e(a, a2);
        }
      }
      t.check(u6 == u3 && u7 == u3, "uniform via crisp descriptions at " + show(r));

      if (!u3) continue;
      ++uniform;
      for (const auto& psi : descriptions) {
        for (std::size_t a1 = 0; a1 < n; ++a1) {
          for (std::size_t a2 = 0; a2 < n; ++a2) {
            t.check(e(a1, a2) == f(psi[a1], psi[a2]), "kernel through a crisp description at " + show(r));
          }
        }
      }
    }
  }
  return {t.violations() == 0 && uniform > 0, std::to_string(uniform) + " uniform relations, " + t.summary()};
}

Outcome quotient_suite() {
  Tally t;
  Gen gen = Gen::chain2(4001);
  const Lattice c = gen.lattice();
  const std::vector<std::vector<FuzzyEquivalence>> all = {{}, {}, {},
                                                          all_equivalences(c, gen.carrier(), 3),
                                                          all_equivalences(c, gen.carrier(), 4)};
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = gen.between(3, 4);
    const auto sys = system_on(gen.family(gen.between(1, 2), n));
    const auto [e, f] = gen.nested(n);
    const auto q = quotient_system(sys, e);
    const auto labels = q.system.carrier();
    const auto univ_q = FuzzyRelation::universal(c, sys.carrier(), labels);

    // Natural map.
    const auto nat = natural_map(e).relabeled(sys.carrier(), labels);
    t.check(is_uniform(nat) && kernel(nat).relation() == e.relation(), "natural map uniform with kernel E");
    t.check(verify_solution(toward_quotient(1, sys, q, univ_q), nat) &&
                verify_solution(toward_quotient(2, sys, q, univ_q), nat),
            "natural map solves wl2-1 and wl2-2");

    // Natural map against wl1-4, for a random E and for the greatest wl1-4 solution.
    const auto greatest_e =
        FuzzyEquivalence(solve_greatest(WeaklyLinearSystem::homogeneous(4, sys.relations(), universal_on(c, n))).solution);
    for (const auto* eq : {&e, &greatest_e}) {
      const auto qq = quotient_system(sys, *eq);
      const auto nn = natural_map(*eq).relabeled(sys.carrier(), qq.system.carrier());
      const auto uu = FuzzyRelation::universal(c, sys.carrier(), qq.system.carrier());
      const bool i = verify_solution(WeaklyLinearSystem::homogeneous(4, sys.relations(), universal_on(c, n)),
                                     eq->relation());
      const bool ii = verify_solution(toward_quotient(3, sys, qq, uu), nn);
      const bool iii = verify_solution(toward_quotient(5, sys, qq, uu), nn);
      t.check(i == ii && ii == iii, "natural map characterization of wl1-4");
    }

    // Relative quotient and the second isomorphism.
    const auto fe = relative_quotient(f, e);
    t.check(is_equivalence(fe.relation()), "F/E is an equivalence");
    const auto qq = quotient_system(q.system, FuzzyEquivalence(fe.relation().relabeled(labels, labels)));
    const auto witness = second_isomorphism_witness(f, e);
    t.check(is_isomorphism(witness, quotient_system(sys, f).system, qq.system), "second isomorphism");

    // Order embedding over all equivalences above E.
    std::vector<const FuzzyEquivalence*> above;
    for (const auto& g : all[n]) {
      if (leq(e.relation(), g.relation())) above.push_back(&g);
    }
    for (std::size_t k = 0; k < 12 && above.size() > 1; ++k) {
      const auto* g1 = above[gen.between(0, above.size() - 1)];
      const auto* g2 = above[gen.between(0, above.size() - 1)];
      t.check(leq(g1->relation(), g2->relation()) ==
                  leq(relative_quotient(*g1, e).relation(), relative_quotient(*g2, e).relation()),
              "order embedding");
    }

    // Lift F_E.
    const auto l = lift(f, e).relabeled(sys.carrier(), labels);
    t.check(is_uniform(l) && kernel(l).relation() == f.relation() &&
                cokernel(l).relation() == fe.relation().relabeled(labels, labels),
            "lift is uniform with kernel F and co-kernel F/E");

    // Correspondence under a bound W.
    const FuzzyEquivalence w = all[n][gen.between(0, all[n].size() - 1)];
    const auto homo = WeaklyLinearSystem::homogeneous(4, sys.relations(), w.relation());
    const auto base = FuzzyEquivalence(solve_greatest(homo).solution);
    const auto qb = quotient_system(sys, base);
    const auto lb = qb.system.carrier();
    const auto w_e = relative_quotient(w, base).relation().relabeled(lb, lb);
    const auto homo_q = WeaklyLinearSystem::homogeneous(4, qb.system.relations(), w_e);
    const auto het = toward_quotient(3, sys, qb, lift(w, base).relabeled(sys.carrier(), lb));
    t.check(relative_quotient(base, base).relation().relabeled(lb, lb) == solve_greatest(homo_q).solution,
            "greatest solutions correspond");
    for (const auto& g : all[n]) {
      if (!leq(base.relation(), g.relation())) continue;
      const bool solves = verify_solution(homo, g.relation());
      t.check(solves == verify_solution(homo_q, relative_quotient(g, base).relation().relabeled(lb, lb)),
              "solutions correspond on the quotient");
      t.check(solves == verify_solution(het, lift(g, base).relabeled(sys.carrier(), lb)),
              "solutions correspond through the lift");
    }
    // A smaller E that still solves the system.
    const auto id = FuzzyEquivalence::identity(c, sys.carrier());
    const auto qi = quotient_system(sys, id);
    const auto homo_i = WeaklyLinearSystem::homogeneous(4, qi.system.relations(),
                                                        w.relation().relabeled(qi.system.carrier(), qi.system.carrier()));
    t.check(relative_quotient(base, id).relation().relabeled(qi.system.carrier(), qi.system.carrier()) ==
                solve_greatest(homo_i).solution,
            "greatest solutions correspond over the identity");
  }
  return {t.violations() == 0, t.summary()};
}

Outcome decomposition_suite() {
  Tally t;
  std::size_t rr = 0, crafted = 0, iff = 0, greatest = 0;

  // Products of solutions of variants 3 and 4 solve the induced homogeneous systems.
  for (auto gen : {Gen::chain2(5001), Gen::goedel_half(5002)}) {
    for (int round = 0; round < 60; ++round) {
      const auto sys = gen.heterogeneous(3, 3, 2);
      const auto& z = sys.bound();
      const auto zz = compose(z, converse(z));
      const auto ziz = compose(converse(z), z);
      const auto r3 = solve_greatest(sys).solution;
      t.check(verify_solution(WeaklyLinearSystem::homogeneous(4, sys.v_relations(), zz), compose(r3, converse(r3))),
              "R.R^-1 for wl2-3");
      t.check(verify_solution(WeaklyLinearSystem::homogeneous(4, sys.w_relations(), ziz), compose(converse(r3), r3)),
              "R^-1.R for wl2-3");
      // wl2-4 over V, W is wl2-3 over the converse families.
      const auto r4 = solve_greatest(sys.with_variant(4)).solution;
      t.check(verify_solution(WeaklyLinearSystem::homogeneous(4, converses(sys.v_relations()), zz),
                              compose(r4, converse(r4))),
              "R.R^-1 for wl2-4");
      t.check(verify_solution(WeaklyLinearSystem::homogeneous(4, converses(sys.w_relations()), ziz),
                              compose(converse(r4), r4)),
              "R^-1.R for wl2-4");
      rr += 2;
    }
  }

  // Decompose then reconstruct on natural maps toward the quotient by the greatest wl1-4 solution.
  Gen gen = Gen::chain2(5003);
  const Lattice c = gen.lattice();
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = gen.between(2, 4);
    const auto sys = system_on(gen.family(gen.between(1, 2), n));
    const auto e = FuzzyEquivalence(
        solve_greatest(WeaklyLinearSystem::homogeneous(4, sys.relations(), universal_on(c, n))).solution);
    const auto q = quotient_system(sys, e);
    const auto nat = natural_map(e).relabeled(sys.carrier(), q.system.carrier());
    for (int v : {3, 5}) {
      const auto het = toward_quotient(v, sys, q, FuzzyRelation::universal(c, sys.carrier(), q.system.carrier()));
      if (!verify_solution(het, nat)) {
        t.check(false, "natural map is not a solution");
        continue;
      }
      const auto d = decompose_uniform_solution(nat, het);
      const auto rebuilt = reconstruct_uniform(d.kernel, d.cokernel, d.iso.map);
      t.check(d.kernel.relation() == e.relation() && rebuilt == nat && verify_solution(het, rebuilt),
              "decompose then reconstruct");
      ++crafted;
    }
  }

  // Both directions on every uniform relation below a bound.
  const std::vector<TruthValue> carrier = {tv("0"), tv("1/2"), tv("1")};
  for (int round = 0; round < 24; ++round) {
    const std::size_t na = gen.between(2, 3), nb = na == 3 ? 2 : gen.between(2, 3);
    const auto v = gen.family(gen.between(1, 2), na);
    const auto w = gen.family(v.size(), nb);
    const auto z = gen.coin(0.5) ? FuzzyRelation::universal(c, numbered_labels(na), numbered_labels(nb))
                                 : gen.relation(na, nb);
    const auto zz = compose(z, converse(z));
    const auto ziz = compose(converse(z), z);
    const FuzzyRelationalSystem sa(c, numbered_labels(na), v), sb(c, numbered_labels(nb), w);
    for (const auto& r : all_relations(c, carrier, na, nb)) {
      if (!leq(r, z) || !is_uniform(r)) continue;
      const auto e = kernel(r), f = cokernel(r);
      const auto map = induced_bijection(r).map;
      const bool iso = is_isomorphism(map, quotient_system(sa, e).system, quotient_system(sb, f).system);
      const bool i = verify_solution(WeaklyLinearSystem::homogeneous(4, v, zz), e.relation());
      for (int variant : {3, 5}) {
        const bool ii = verify_solution(WeaklyLinearSystem::homogeneous(variant == 3 ? 4 : 5, w, ziz), f.relation());
        const bool solves = verify_solution(WeaklyLinearSystem::heterogeneous(variant, v, w, z), r);
        t.check(solves == (i && ii && iso), "uniform solution characterization, wl2-" + std::to_string(variant) +
                                                " at " + show(r));
        if (solves) t.check(reconstruct_uniform(e, f, map) == r, "reconstruction of a uniform solution");
        ++iff;
      }
    }
  }

  // Greatest solutions under a uniform bound with a uniform solution.
  for (int round = 0; round < 120; ++round) {
    std::vector<FuzzyRelation> v, w;
    FuzzyRelation z = universal_on(c, 1);
    if (round % 2 == 0) {
      // Toward the quotient by the greatest wl1-4 solution, where the natural map is a uniform solution.
      const std::size_t n = gen.between(2, 3);
      const auto sys_a = system_on(gen.family(gen.between(1, 2), n));
      const auto e = FuzzyEquivalence(
          solve_greatest(WeaklyLinearSystem::homogeneous(4, sys_a.relations(), universal_on(c, n))).solution);
      const auto q = quotient_system(sys_a, e);
      const auto m = q.system.size();
      v = sys_a.relations();
      for (const auto& r : q.system.relations()) w.push_back(r.relabeled(numbered_labels(m), numbered_labels(m)));
      z = FuzzyRelation::universal(c, numbered_labels(n), numbered_labels(m));
    } else {
      const std::size_t na = gen.between(1, 3), nb = gen.between(1, 3);
      v = gen.family(gen.between(1, 2), na);
      w = gen.family(v.size(), nb);
      z = gen.relation(na, nb);
      if (gen.coin(0.5) || !is_uniform(z)) z = FuzzyRelation::universal(c, numbered_labels(na), numbered_labels(nb));
    }
    const auto sys = WeaklyLinearSystem::heterogeneous(3, v, w, z);
    bool has_uniform = false;
    for (const auto& s : oracle::all_solutions(sys)) has_uniform = has_uniform || is_uniform(s);
    if (!has_uniform) continue;
    const auto r = solve_greatest(sys).solution;
    const auto g = solve_greatest(WeaklyLinearSystem::homogeneous(4, v, compose(z, converse(z)))).solution;
    const auto h = solve_greatest(WeaklyLinearSystem::homogeneous(4, w, compose(converse(z), z))).solution;
    t.check(is_uniform(r), "greatest solution is uniform at " + show(r));
    t.check(is_uniform(r) && kernel(r).relation() == g && cokernel(r).relation() == h,
            "kernel and co-kernel are the greatest homogeneous solutions");
    ++greatest;
  }

  std::ostringstream os;
  os << rr << " products, " << crafted << " decompositions, " << iff << " characterizations, " << greatest
     << " uniform-bound instances, " << t.summary();
  return {t.violations() == 0 && crafted > 0 && iff > 0 && greatest >= 50, os.str()};
}

Outcome termination_policy() {
  Tally t;
  const Lattice p = Lattice::product();
  const auto sys = WeaklyLinearSystem::heterogeneous(
      2, {mat(p, {{"1", "0"}, {"0", "1"}})}, {mat(p, {{"1/2", "0"}, {"0", "1"}})}, universal_on(p, 2));
  const auto r = solve_greatest(sys, SolveOptions{200});
  t.check(r.status == SolveStatus::CapReached, "status is " + std::string(to_string(r.status)));
  t.check(r.iterations == 200, "iterations " + std::to_string(r.iterations));
  const std::vector<TruthValue> dyadic = {tv("0"), tv("1/16"), tv("1/8"), tv("1/4"), tv("1/2"), tv("1")};
  const auto projected = oracle::brute_force_greatest_over(sys, dyadic);
  t.check(leq(projected, r.solution), "bound " + show(projected) + " not below " + show(r.solution));
  t.check(!predict_termination(sys).guaranteed_finite, "product predicted finite");

  WorkedExample ex;
  const auto g = predict_termination(ex.system(1));
  t.check(g.guaranteed_finite, "Goedel not predicted finite");
  t.check(solve_greatest(ex.system(1)).status == SolveStatus::Stabilized, "Goedel did not stabilize");
  return {t.violations() == 0, t.summary()};
}

Outcome isotonicity() {
  Tally t;
  std::size_t pairs = 0;
  const std::vector<TruthValue> quarters = {tv("0"), tv("1/4"), tv("1/2"), tv("3/4"), tv("1")};
  for (auto gen : {Gen::chain2(6001), Gen::goedel_half(6002), Gen(Lattice::lukasiewicz(), quarters, 6003),
                   Gen(Lattice::product(), quarters, 6004)}) {
    for (int round = 0; round < 150; ++round) {
      const int v = round % 6 + 1;
      const auto sys = round % 12 < 6 ? gen.heterogeneous(v, 3, 2) : gen.homogeneous(v, 3, 2);
      const auto big = gen.relation(sys.a_labels().size(), sys.b_labels().size());
      const auto small = gen.below(big);
      t.check(leq(phi(sys, small), phi(sys, big)), sys.kind().name() + " at " + show(small) + " <= " + show(big));
      ++pairs;
    }
  }
  return {t.violations() == 0 && pairs >= 500, std::to_string(pairs) + " pairs, " + t.summary()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked example, greatest solutions", kFastSeconds, published_example},
      {2, "worked example, crisp solutions", kFastSeconds, published_crisp},
      {3, "solver matches brute force", kSlowSeconds, oracle_equivalence},
      {4, "homogeneous systems", kSlowSeconds, homogeneous_specialization},
      {5, "algebra laws", kSlowSeconds, algebra_laws},
      {6, "uniform relations", kSlowSeconds, uniform_suite},
      {7, "quotient constructions", kSlowSeconds, quotient_suite},
      {8, "uniform solutions and decomposition", kSlowSeconds, decomposition_suite},
      {9, "termination policy", kSlowSeconds, termination_policy},
      {10, "isotonicity", kSlowSeconds, isotonicity},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::printf("criterion %d: %s  %s (%.3f s, limit %.0f s) %s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs,
                c.limit, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
