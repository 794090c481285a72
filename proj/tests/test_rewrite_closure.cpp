#include <algorithm>

#include "dersat/closure.hpp"
#include "dersat/rewrite.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace dersat;

namespace {

struct Syms {
  FunId f, g, h, b, c, d;
  FunId cs[6];
  Syms() {
    auto& sig = Signature::instance();
    f = sig.intern("f", 1);
    g = sig.intern("g", 1);
    h = sig.intern("h", 1);
    b = sig.intern("b", 0);
    c = sig.intern("c", 0);
    d = sig.intern("d", 0);
    for (int i = 0; i < 6; ++i) cs[i] = sig.intern("c" + std::to_string(i + 1), 0);
  }
};

Syms& S() {
  static Syms s;
  return s;
}

Term V(VarId v) { return Term::var(v); }
Term F(Term a) { return Term::app(S().f, {a}); }
Term G(Term a) { return Term::app(S().g, {a}); }
Term H(Term a) { return Term::app(S().h, {a}); }
Term B() { return Term::app(S().b); }
Term C() { return Term::app(S().c); }
Term D() { return Term::app(S().d); }
Term Ci(int i) { return Term::app(S().cs[i - 1]); }

// unit weights, f above g above h above b above c above d
OrderingConfig unit_kbo() {
  OrderingConfig cfg;
  cfg.kind = OrderKind::Kbo;
  cfg.var_weight = 1;
  cfg.weights = {{S().f, 1}, {S().g, 1}, {S().h, 1},
                 {S().b, 1}, {S().c, 1}, {S().d, 1}};
  for (int i = 0; i < 6; ++i) cfg.weights[S().cs[i]] = 1;
  cfg.precedence = precedence_desc({S().f, S().g, S().h, S().cs[5], S().cs[4],
                                    S().cs[3], S().cs[2], S().cs[1], S().cs[0],
                                    S().b, S().c, S().d});
  return cfg;
}

OrderingConfig five_lpo() {
  OrderingConfig cfg;
  cfg.kind = OrderKind::Lpo;
  cfg.precedence = precedence_desc({S().f, S().cs[5], S().cs[4], S().cs[3],
                                    S().cs[2], S().cs[1], S().cs[0], S().b});
  return cfg;
}

bool same_labeled_multiset(std::vector<LabeledTerm> a, std::vector<LabeledTerm> b) {
  auto lt = [](const LabeledTerm& x, const LabeledTerm& y) {
    if (int c = syntactic_compare(x.t, y.t)) return c < 0;
    return x.label < y.label;
  };
  std::sort(a.begin(), a.end(), lt);
  std::sort(b.begin(), b.end(), lt);
  return a == b;
}

bool same_pair_multiset(std::vector<TermPair> a, std::vector<TermPair> b) {
  auto norm = [](TermPair p) {
    if (syntactic_compare(p.first, p.second) > 0) std::swap(p.first, p.second);
    return p;
  };
  auto lt = [](const TermPair& x, const TermPair& y) {
    if (int c = syntactic_compare(x.first, y.first)) return c < 0;
    return syntactic_compare(x.second, y.second) < 0;
  };
  for (auto& p : a) p = norm(p);
  for (auto& p : b) p = norm(p);
  std::sort(a.begin(), a.end(), lt);
  std::sort(b.begin(), b.end(), lt);
  return a == b;
}

GroundClosure closure_of(Clause c, Substitution t) {
  return GroundClosure(std::move(c), std::move(t));
}

}  // namespace

TEST_CASE("rewrite systems normalize and detect left reducedness") {
  GroundRewriteSystem r({{F(B()), B()}, {G(G(B())), B()}});
  CHECK(r.left_reduced());
  CHECK(r.size() == 2);
  CHECK(normalize(r, F(F(F(B())))) == B());
  CHECK(normalize(r, H(G(G(B())))) == H(B()));
  CHECK(normalize(r, C()) == C());
  CHECK(irreducible(r, G(B())));
  CHECK(!irreducible(r, F(B())));

  GroundRewriteSystem dup({{F(B()), B()}, {F(B()), B()}});
  CHECK(dup.size() == 1);

  CHECK(!GroundRewriteSystem({{F(B()), B()}, {F(F(B())), B()}}).left_reduced());
  CHECK(!GroundRewriteSystem({{F(B()), B()}, {F(B()), C()}}).left_reduced());
  CHECK(GroundRewriteSystem().left_reduced());

  CHECK_THROWS_AS(GroundRewriteSystem({{F(V(0)), B()}}), std::invalid_argument);

  auto cfg = unit_kbo();
  CHECK(r.contained_in(cfg));
  CHECK(!GroundRewriteSystem({{B(), F(B())}}).contained_in(cfg));
}

TEST_CASE("single steps prefer the leftmost innermost redex") {
  GroundRewriteSystem r({{F(B()), B()}});
  auto s = find_step(r, F(F(B())));
  REQUIRE(s.has_value());
  CHECK(s->pos == Position{1});

  auto top = find_step(r, F(B()));
  REQUIRE(top.has_value());
  CHECK(top->pos == Position{});
  CHECK(!find_step(r, G(B())).has_value());
}

TEST_CASE("reduction multisets on fixed terms") {
  GroundRewriteSystem r({{F(B()), B()}});
  CHECK(same_labeled_multiset(rm_horn(r, F(B()), 0), {{F(B()), 0}}));
  CHECK(same_labeled_multiset(rm_horn(r, F(B()), 2), {{F(B()), 2}}));
  CHECK(same_labeled_multiset(rm_horn(r, F(F(B())), 0),
                              {{F(B()), 1}, {F(B()), 0}}));
  CHECK(same_labeled_multiset(rm_horn(r, F(F(B())), 2),
                              {{F(B()), 2}, {F(B()), 2}}));
  CHECK(same_labeled_multiset(rm_horn(r, G(F(B())), 0), {{F(B()), 1}}));
  CHECK(rm_horn(r, B(), 2).empty());

  GroundRewriteSystem bad({{F(B()), B()}, {F(F(B())), C()}});
  CHECK_THROWS_AS(rm_horn(bad, F(B()), 0), std::invalid_argument);

  GroundRewriteSystem r2({{F(B()), B()}, {G(G(B())), B()}});
  CHECK(same_pair_multiset(rm_nh(r2, G(G(B()))), {{G(G(B())), G(G(B()))}}));
  CHECK(same_pair_multiset(rm_nh(r2, F(F(B()))),
                           {{F(B()), F(B())}, {F(B()), F(B())}}));
}

TEST_CASE("reduction multisets do not depend on the strategy") {
  testgen::TermGen gen(8888);
  GroundRewriteSystem r({{F(B()), B()}, {G(G(B())), B()}, {H(C()), C()}});
  REQUIRE(r.left_reduced());
  auto build = [&](int d) {
    // ground terms over f, g, h, b, c
    std::function<Term(int)> go = [&](int depth) -> Term {
      if (depth <= 0) return gen.pick(2) ? B() : C();
      switch (gen.pick(4)) {
        case 0: return F(go(depth - 1));
        case 1: return G(go(depth - 1));
        case 2: return H(go(depth - 1));
        default: return gen.pick(2) ? B() : C();
      }
    };
    return go(d);
  };
  for (int i = 0; i < 200; ++i) {
    Term t = build(4);
    for (int m : {0, 1, 2}) {
      auto reference = rm_horn(r, t, m);
      auto random_strategy = [&](const std::vector<RewriteStep>& steps) {
        return static_cast<size_t>(gen.pick(static_cast<int>(steps.size())));
      };
      CHECK(same_labeled_multiset(
          reference, rm_horn_with_strategy(r, t, m, random_strategy)));
    }
  }
}

TEST_CASE("labeled skeleton collections") {
  // one positive literal: proper subterms get label 1, tops label 0
  Clause c1 = clause({eq(H(G(G(V(0)))), F(F(B())))});
  LssLts p1 = lss_lts(c1);
  CHECK(same_labeled_multiset(p1.lss, {{G(G(V(0))), 1},
                                       {G(V(0)), 1},
                                       {V(0), 1},
                                       {F(B()), 1},
                                       {B(), 1},
                                       {H(G(G(V(0)))), 0},
                                       {F(F(B())), 0}}));
  CHECK(same_labeled_multiset(p1.lts, {{H(G(G(V(0)))), 0}, {F(F(B())), 0}}));

  // a term that is both a positive top and a deeper subterm keeps the
  // greater label in lss while lts still records the top
  Clause c2 = clause({eq(H(F(V(0))), D()), eq(F(V(0)), C())});
  LssLts p2 = lss_lts(c2);
  CHECK(same_labeled_multiset(p2.lss, {{H(F(V(0))), 0},
                                       {F(V(0)), 1},
                                       {V(0), 1},
                                       {D(), 0},
                                       {C(), 0}}));
  CHECK(same_labeled_multiset(p2.lts, {{H(F(V(0))), 0},
                                       {F(V(0)), 0},
                                       {D(), 0},
                                       {C(), 0}}));

  // negative occurrences dominate everything
  Clause c3 = clause({neq(G(V(0)), C()), eq(G(V(0)), D())});
  LssLts p3 = lss_lts(c3);
  CHECK(same_labeled_multiset(p3.lss, {{G(V(0)), 2}, {V(0), 2}, {C(), 2}, {D(), 0}}));
  CHECK(same_labeled_multiset(p3.lts, {{G(V(0)), 2}, {C(), 2}, {D(), 0}}));

  SsTsNh nh = ss_ts_nh(c3);
  CHECK(nh.ss_neg == TermSet{G(V(0)), V(0), C()});
  CHECK(nh.ts_neg == TermSet{G(V(0)), C()});
  CHECK(ss_ts_nh(c1).ss_neg.empty());
}

TEST_CASE("normalization multisets of the worked unit closures") {
  GroundRewriteSystem r({{F(B()), B()}, {G(G(B())), B()}});
  Substitution th = Substitution::single(0, B());

  GroundClosure clo = closure_of(clause({eq(H(G(G(V(0)))), F(F(B())))}), th);
  CHECK(same_labeled_multiset(nm_horn(r, clo), {{G(G(B())), 1},
                                                {F(B()), 1},
                                                {F(B()), 0},
                                                {H(B()), 0},
                                                {B(), 0}}));

  GroundRewriteSystem r1({{F(B()), B()}});
  Substitution th2;
  th2.bind(0, B());
  th2.bind(1, B());
  GroundClosure general = closure_of(clause({eq(H(F(V(0))), F(V(1)))}), th2);
  CHECK(same_labeled_multiset(nm_horn(r1, general),
                              {{F(B()), 1}, {F(B()), 0}, {H(B()), 0}, {B(), 0}}));

  // instantiating x to y merges the argument positions and drops a redex
  GroundClosure special = closure_of(clause({eq(H(F(V(1))), F(V(1)))}),
                                     Substitution::single(1, B()));
  CHECK(same_labeled_multiset(nm_horn(r1, special),
                              {{F(B()), 1}, {H(B()), 0}, {B(), 0}}));

  auto cfg = unit_kbo();
  CHECK(nm_compare(cfg, r1, ClosureVariant::Horn, general, special) ==
        Cmp::Greater);
  CHECK(closure_compare(cfg, r1, ClosureVariant::Horn, general, special) ==
        Cmp::Greater);
}

TEST_CASE("normalization multisets of ground negative closures") {
  GroundRewriteSystem r({{G(B()), C()}});
  GroundClosure a = closure_of(clause({neq(G(B()), C()), neq(F(C()), D())}), {});
  CHECK(same_labeled_multiset(
      nm_horn(r, a),
      {{G(B()), 2}, {C(), 2}, {C(), 2}, {F(C()), 2}, {D(), 2}}));

  GroundClosure b = closure_of(clause({neq(F(G(B())), D())}), {});
  CHECK(same_labeled_multiset(nm_horn(r, b), {{G(B()), 2}, {F(C()), 2}, {D(), 2}}));

  // the two literal closure strictly contains the other multiset
  auto cfg = unit_kbo();
  CHECK(nm_compare(cfg, r, ClosureVariant::Horn, a, b) == Cmp::Greater);
}

TEST_CASE("a chain of light redexes loses against one heavy redex") {
  GroundRewriteSystem r({{F(B()), B()}, {G(G(B())), B()}});
  GroundClosure chain = closure_of(clause({neq(F(F(F(B()))), C())}), {});
  GroundClosure heavy = closure_of(clause({neq(G(G(B())), C())}), {});
  CHECK(same_labeled_multiset(
      nm_horn(r, chain),
      {{F(B()), 2}, {F(B()), 2}, {F(B()), 2}, {B(), 2}, {C(), 2}}));
  CHECK(same_labeled_multiset(nm_horn(r, heavy),
                              {{G(G(B())), 2}, {B(), 2}, {C(), 2}}));
  auto cfg = unit_kbo();
  CHECK(term_compare(cfg, G(G(B())), F(B())) == Cmp::Greater);
  CHECK(closure_compare(cfg, r, ClosureVariant::Horn, chain, heavy) == Cmp::Less);
}

TEST_CASE("the superposition failure witness for the labeled ordering") {
  auto cfg = five_lpo();
  GroundRewriteSystem r({{F(B()), Ci(3)}});
  Substitution th;
  for (VarId v = 1; v <= 6; ++v) th.bind(v, B());

  GroundClosure left = closure_of(
      clause({eq(F(V(1)), Ci(1)), eq(F(V(2)), Ci(2)), eq(F(V(3)), Ci(3))}), th);
  GroundClosure right = closure_of(
      clause({eq(F(V(4)), Ci(4)), eq(F(V(5)), Ci(5)), eq(F(V(6)), Ci(6))}), th);
  GroundClosure concl = closure_of(
      clause({eq(F(V(1)), Ci(1)), eq(F(V(2)), Ci(2)), eq(F(V(4)), Ci(4)),
              eq(F(V(5)), Ci(5)), eq(Ci(3), Ci(6))}),
      th);

  // three top redexes in each premise, four in the conclusion
  auto count_fb0 = [&](const GroundClosure& c) {
    auto nm = nm_horn(r, c);
    return std::count(nm.begin(), nm.end(), LabeledTerm{F(B()), 0});
  };
  CHECK(count_fb0(left) == 3);
  CHECK(count_fb0(right) == 3);
  CHECK(count_fb0(concl) == 4);

  // under the labeled ordering the conclusion outweighs both premises
  CHECK(closure_compare(cfg, r, ClosureVariant::Horn, concl, left) == Cmp::Greater);
  CHECK(closure_compare(cfg, r, ClosureVariant::Horn, concl, right) == Cmp::Greater);

  // the unlabeled pair ordering repairs the inference
  CHECK(same_pair_multiset(nm_nh(r, left),
                           {{F(B()), Ci(1)}, {F(B()), Ci(2)}, {F(B()), Ci(3)}}));
  CHECK(same_pair_multiset(nm_nh(r, right),
                           {{F(B()), Ci(4)}, {F(B()), Ci(5)}, {F(B()), Ci(6)}}));
  CHECK(same_pair_multiset(nm_nh(r, concl),
                           {{F(B()), Ci(1)},
                            {F(B()), Ci(2)},
                            {F(B()), Ci(4)},
                            {F(B()), Ci(5)},
                            {Ci(3), Ci(6)}}));
  CHECK(closure_compare(cfg, r, ClosureVariant::NonHorn, left, right) == Cmp::Less);
  CHECK(closure_compare(cfg, r, ClosureVariant::NonHorn, concl, right) == Cmp::Less);
  CHECK(closure_compare(cfg, r, ClosureVariant::NonHorn, concl, left) ==
        Cmp::Greater);
}

TEST_CASE("negative pairs in the unlabeled multiset") {
  GroundRewriteSystem r({{F(B()), Ci(3)}});
  GroundClosure c = closure_of(
      clause({neq(F(V(0)), Ci(1)), eq(F(V(1)), Ci(2))}),
      [] {
        Substitution t;
        t.bind(0, B());
        t.bind(1, B());
        return t;
      }());
  // negative side: redex f(b) once, then both normal forms doubled;
  // positive literal contributes its unnormalized pair
  CHECK(same_pair_multiset(nm_nh(r, c), {{F(B()), F(B())},
                                         {Ci(3), Ci(3)},
                                         {Ci(1), Ci(1)},
                                         {F(B()), Ci(2)}}));
}

TEST_CASE("closure truth evaluation") {
  GroundRewriteSystem r({{F(B()), B()}});
  CHECK(clause_true_in(r, clause({eq(F(B()), B())})));
  CHECK(clause_true_in(r, clause({eq(F(F(B())), B())})));
  CHECK(!clause_true_in(r, clause({eq(F(B()), C())})));
  CHECK(clause_true_in(r, clause({neq(F(B()), C())})));
  CHECK(!clause_true_in(r, Clause{}));
  CHECK(clause_true_in(r, clause({eq(B(), C()), neq(B(), C())})));
}

TEST_CASE("closure identity") {
  Substitution tb = Substitution::single(0, B());
  Substitution tb1 = Substitution::single(1, B());
  GroundClosure a = closure_of(clause({eq(G(V(0)), C())}), tb);
  GroundClosure b = closure_of(clause({eq(G(V(1)), C())}), tb1);
  GroundClosure ground = closure_of(clause({eq(G(B()), C())}), {});
  CHECK(closure_equal(a, b));
  CHECK(!closure_equal(a, ground));
  CHECK(a.instance == ground.instance);
  CHECK(closure_key(a) == closure_key(b));
  CHECK(closure_key(a) != closure_key(ground));

  CHECK_THROWS_AS(closure_of(clause({eq(G(V(0)), V(1))}), tb),
                  std::invalid_argument);
  CHECK_THROWS_AS(clo_tiebreak(a, closure_of(clause({eq(G(B()), D())}), {})),
                  std::invalid_argument);

  // the generality tiebreak puts the plain instance below the general form
  CHECK(clo_tiebreak(a, ground) == Cmp::Greater);
  CHECK(clo_tiebreak(ground, a) == Cmp::Less);
  CHECK(clo_tiebreak(a, b) == Cmp::Equal);
}

TEST_CASE("instantiation never enlarges a closure") {
  testgen::TermGen gen(13131);
  auto cfg = gen.kbo();
  // rules over the generator signature, left-reduced and order-contained
  GroundRewriteSystem r({{Term::app(gen.rg, {Term::app(gen.ra)}), Term::app(gen.ra)},
                         {Term::app(gen.rh, {Term::app(gen.rb)}), Term::app(gen.rc)}});
  REQUIRE(r.left_reduced());
  REQUIRE(r.contained_in(cfg));
  for (int i = 0; i < 120; ++i) {
    Clause cl = gen.clause(3, 2);
    std::set<VarId> vs = vars(cl);
    if (vs.empty()) continue;
    // sigma maps one variable to a ground term, theta grounds the rest
    VarId target = *vs.begin();
    Substitution sigma = Substitution::single(target, gen.ground(2));
    Substitution theta = gen.ground_subst(vs, 2);
    Substitution full = Substitution::compose(theta, sigma);
    GroundClosure general(cl, full);
    GroundClosure special(apply(sigma, cl), theta);
    CHECK(general.instance == special.instance);
    for (auto variant : {ClosureVariant::Horn, ClosureVariant::NonHorn}) {
      Cmp c = closure_compare(cfg, r, variant, general, special);
      CHECK((c == Cmp::Greater || c == Cmp::Equal));
    }
  }
}

TEST_CASE("closure comparison is total and antisymmetric on ground closures") {
  testgen::TermGen gen(777);
  auto cfg = gen.kbo();
  GroundRewriteSystem r({{Term::app(gen.rg, {Term::app(gen.ra)}), Term::app(gen.ra)},
                         {Term::app(gen.rf, {Term::app(gen.ra), Term::app(gen.ra)}),
                          Term::app(gen.rc)}});
  REQUIRE(r.left_reduced());
  REQUIRE(r.contained_in(cfg));
  std::vector<GroundClosure> pool;
  for (int i = 0; i < 24; ++i) {
    Clause cl = gen.clause(2, 2);
    pool.emplace_back(cl, gen.ground_subst(vars(cl), 2));
  }
  for (auto variant : {ClosureVariant::Horn, ClosureVariant::NonHorn}) {
    for (const auto& a : pool)
      for (const auto& b : pool) {
        Cmp ab = closure_compare(cfg, r, variant, a, b);
        CHECK(ab != Cmp::Incomparable);
        CHECK(closure_compare(cfg, r, variant, b, a) == flip(ab));
        CHECK((ab == Cmp::Equal) == closure_equal(a, b));
      }
  }
}
