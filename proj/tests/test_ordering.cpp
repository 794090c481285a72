#include <algorithm>
#include <numeric>

#include "dersat/ordering.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace dersat;

namespace {

struct Syms {
  FunId f, g, b, bp, c, cp, d;
  Syms() {
    auto& sig = Signature::instance();
    f = sig.intern("f", 2);
    g = sig.intern("g", 1);
    b = sig.intern("b", 0);
    bp = sig.intern("b'", 0);
    c = sig.intern("c", 0);
    cp = sig.intern("c'", 0);
    d = sig.intern("d", 0);
  }
};

Syms& S() {
  static Syms s;
  return s;
}

Term V(VarId v) { return Term::var(v); }
Term F(Term a, Term b) { return Term::app(S().f, {a, b}); }
Term G(Term a) { return Term::app(S().g, {a}); }
Term B() { return Term::app(S().b); }
Term Bp() { return Term::app(S().bp); }
Term C() { return Term::app(S().c); }
Term Cp() { return Term::app(S().cp); }
Term D() { return Term::app(S().d); }

// the weights and precedence of the seven-symbol benchmark problem
OrderingConfig bench_kbo() {
  OrderingConfig cfg;
  cfg.kind = OrderKind::Kbo;
  cfg.var_weight = 1;
  cfg.weights = {{S().f, 4}, {S().g, 3}, {S().b, 4}, {S().bp, 2},
                 {S().c, 1}, {S().cp, 1}, {S().d, 1}};
  cfg.precedence = precedence_desc({S().f, S().g, S().b, S().bp, S().c, S().cp, S().d});
  return cfg;
}

// exhaustive Dershowitz-Manna evaluation used as an oracle: try every
// matching order for the equal-pair removal and require agreement
template <typename T, typename FBase>
Cmp oracle_multiset(FBase&& base, const std::vector<T>& m1, const std::vector<T>& m2) {
  std::vector<size_t> perm(m2.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Cmp> agreed;
  do {
    std::vector<char> used_a(m1.size(), 0), used_b(m2.size(), 0);
    for (size_t i = 0; i < m1.size(); ++i)
      for (size_t jj = 0; jj < m2.size(); ++jj) {
        size_t j = perm[jj];
        if (used_b[j]) continue;
        if (base(m1[i], m2[j]) == Cmp::Equal) {
          used_a[i] = used_b[j] = 1;
          break;
        }
      }
    std::vector<T> ra, rb;
    for (size_t i = 0; i < m1.size(); ++i)
      if (!used_a[i]) ra.push_back(m1[i]);
    for (size_t j = 0; j < m2.size(); ++j)
      if (!used_b[j]) rb.push_back(m2[j]);
    Cmp r;
    if (ra.empty() && rb.empty()) {
      r = Cmp::Equal;
    } else {
      auto dominated = [&](const T& x, const std::vector<T>& from) {
        for (const T& y : from)
          if (base(y, x) == Cmp::Greater) return true;
        return false;
      };
      bool gt = std::all_of(rb.begin(), rb.end(),
                            [&](const T& x) { return dominated(x, ra); });
      bool lt = std::all_of(ra.begin(), ra.end(),
                            [&](const T& x) { return dominated(x, rb); });
      r = gt ? Cmp::Greater : lt ? Cmp::Less : Cmp::Incomparable;
    }
    if (agreed && *agreed != r) return Cmp::Incomparable;  // flagged by caller
    agreed = r;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *agreed;
}

}  // namespace

TEST_CASE("kbo weights") {
  auto cfg = bench_kbo();
  CHECK(term_weight(cfg, F(C(), D())) == 6);
  CHECK(term_weight(cfg, G(B())) == 7);
  CHECK(term_weight(cfg, V(0)) == 1);
  CHECK(term_weight(cfg, F(V(0), D())) == 6);
}

TEST_CASE("kbo compares the benchmark terms as expected") {
  auto cfg = bench_kbo();
  cfg.validate();
  CHECK(term_compare(cfg, G(B()), F(C(), D())) == Cmp::Greater);  // 7 > 6
  CHECK(term_compare(cfg, G(C()), B()) == Cmp::Greater);  // weight tie, g above b
  CHECK(term_compare(cfg, B(), C()) == Cmp::Greater);
  CHECK(term_compare(cfg, Bp(), Cp()) == Cmp::Greater);
  CHECK(term_compare(cfg, G(V(0)), D()) == Cmp::Greater);
  CHECK(term_compare(cfg, F(V(0), D()), V(0)) == Cmp::Greater);
  CHECK(term_compare(cfg, C(), Cp()) == Cmp::Greater);  // pure precedence
  CHECK(term_compare(cfg, B(), B()) == Cmp::Equal);
}

TEST_CASE("kbo variable cases") {
  auto cfg = bench_kbo();
  CHECK(term_compare(cfg, V(0), V(0)) == Cmp::Equal);
  CHECK(term_compare(cfg, V(0), V(1)) == Cmp::Incomparable);
  CHECK(term_compare(cfg, V(0), G(V(0))) == Cmp::Less);
  CHECK(term_compare(cfg, F(V(0), V(1)), V(1)) == Cmp::Greater);
  CHECK(term_compare(cfg, V(0), G(V(1))) == Cmp::Incomparable);
  // unbalanced variables block comparison despite the weights
  CHECK(term_compare(cfg, G(V(0)), F(V(1), V(1))) == Cmp::Incomparable);
  CHECK(term_compare(cfg, F(V(0), V(0)), G(V(0))) == Cmp::Greater);  // 9 > 4
}

TEST_CASE("kbo rejects inadmissible parameters") {
  auto cfg = bench_kbo();
  cfg.var_weight = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = bench_kbo();
  cfg.weights[S().d] = 0;  // constant below variable weight
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = bench_kbo();
  cfg.weights[S().g] = 0;  // weight-zero unary symbol must top the precedence
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = bench_kbo();
  cfg.weights.erase(S().g);
  CHECK_THROWS_AS(term_weight(cfg, G(B())), std::invalid_argument);
}

TEST_CASE("lpo basics") {
  auto& sig = Signature::instance();
  FunId f1 = sig.intern("f", 1);
  FunId b = S().b;
  FunId cs[6];
  for (int i = 0; i < 6; ++i)
    cs[i] = sig.intern("c" + std::to_string(i + 1), 0);
  OrderingConfig cfg;
  cfg.kind = OrderKind::Lpo;
  cfg.precedence = precedence_desc({f1, cs[5], cs[4], cs[3], cs[2], cs[1], cs[0], b});

  auto f = [&](Term t) { return Term::app(f1, {t}); };
  Term bb = Term::app(b);
  auto ci = [&](int i) { return Term::app(cs[i - 1]); };

  CHECK(term_compare(cfg, f(bb), ci(6)) == Cmp::Greater);
  CHECK(term_compare(cfg, ci(6), ci(3)) == Cmp::Greater);
  CHECK(term_compare(cfg, ci(3), bb) == Cmp::Greater);
  CHECK(term_compare(cfg, f(V(0)), ci(1)) == Cmp::Greater);
  CHECK(term_compare(cfg, f(f(bb)), f(bb)) == Cmp::Greater);
  CHECK(term_compare(cfg, f(V(0)), V(0)) == Cmp::Greater);
  CHECK(term_compare(cfg, f(V(0)), V(1)) == Cmp::Incomparable);
  CHECK(term_compare(cfg, bb, ci(1)) == Cmp::Less);
}

TEST_CASE("term orders are strict partial orders stable under substitution") {
  testgen::TermGen gen(5150);
  auto kbo = gen.kbo();
  auto lpo = gen.lpo();
  for (const OrderingConfig& cfg : {kbo, lpo}) {
    for (int i = 0; i < 300; ++i) {
      Term s = gen.term(3), t = gen.term(3), u = gen.term(3);
      Cmp st = term_compare(cfg, s, t);
      CHECK(term_compare(cfg, t, s) == flip(st));
      CHECK((st == Cmp::Equal) == (s == t));
      // transitivity
      if (st == Cmp::Greater && term_compare(cfg, t, u) == Cmp::Greater)
        CHECK(term_compare(cfg, s, u) == Cmp::Greater);
      // stability under grounding
      if (st == Cmp::Greater) {
        std::set<VarId> dom = vars(s);
        collect_vars(t, dom);
        Substitution gs = gen.ground_subst(dom, 2);
        CHECK(term_compare(cfg, gs.apply(s), gs.apply(t)) == Cmp::Greater);
      }
      // compatibility with contexts
      if (st == Cmp::Greater || st == Cmp::Less) {
        CHECK(term_compare(cfg, Term::app(gen.rg, {s}), Term::app(gen.rg, {t})) == st);
        Term w = gen.term(2);
        CHECK(term_compare(cfg, Term::app(gen.rf, {s, w}),
                           Term::app(gen.rf, {t, w})) == st);
      }
    }
  }
}

TEST_CASE("term orders are total on ground terms") {
  testgen::TermGen gen(6001);
  auto kbo = gen.kbo();
  auto lpo = gen.lpo();
  for (const OrderingConfig& cfg : {kbo, lpo}) {
    for (int i = 0; i < 300; ++i) {
      Term s = gen.ground(3), t = gen.ground(3);
      Cmp c = term_compare(cfg, s, t);
      CHECK(c != Cmp::Incomparable);
      // ground terms are above their proper subterms
      for (const Term& sub : subterms(s))
        if (!(sub == s)) CHECK(term_compare(cfg, s, sub) == Cmp::Greater);
    }
  }
}

TEST_CASE("multiset extension on fixed examples") {
  auto cfg = bench_kbo();
  auto base = [&](const Term& a, const Term& b) { return term_compare(cfg, a, b); };
  using TV = std::vector<Term>;

  CHECK(multiset_extend(base, TV{B()}, TV{}) == Cmp::Greater);
  CHECK(multiset_extend(base, TV{}, TV{}) == Cmp::Equal);
  CHECK(multiset_extend(base, TV{B(), C()}, TV{C(), B()}) == Cmp::Equal);
  CHECK(multiset_extend(base, TV{B()}, TV{C(), C(), C()}) == Cmp::Greater);
  CHECK(multiset_extend(base, TV{B(), C()}, TV{B()}) == Cmp::Greater);
  CHECK(multiset_extend(base, TV{V(0)}, TV{V(1)}) == Cmp::Incomparable);
  CHECK(multiset_extend(base, TV{G(V(0))}, TV{V(0), V(0)}) == Cmp::Greater);

  // one heavy element beats any number of lighter ones
  CHECK(multiset_extend(base, TV{F(B(), B()), C()}, TV{G(B()), G(B()), G(B())}) ==
        Cmp::Greater);  // f(b,b) weighs 12, g(b) weighs 7
}

TEST_CASE("multiset extension with a unit weight order") {
  // all symbols weigh one: g(g(b)) outweighs f(b), so a single copy of the
  // former dominates three copies of the latter
  auto& sig = Signature::instance();
  FunId f1 = sig.intern("f", 1);
  FunId g1 = S().g;
  FunId b0 = S().b;
  OrderingConfig cfg;
  cfg.kind = OrderKind::Kbo;
  cfg.var_weight = 1;
  cfg.weights = {{f1, 1}, {g1, 1}, {b0, 1}};
  cfg.precedence = precedence_desc({f1, g1, b0});
  Term fb = Term::app(f1, {Term::app(b0)});
  Term ggb = Term::app(g1, {Term::app(g1, {Term::app(b0)})});
  CHECK(term_compare(cfg, ggb, fb) == Cmp::Greater);
  auto base = [&](const Term& a, const Term& b) { return term_compare(cfg, a, b); };
  CHECK(multiset_extend(base, std::vector<Term>{fb, fb, fb},
                        std::vector<Term>{ggb}) == Cmp::Less);
}

TEST_CASE("multiset extension agrees with the exhaustive oracle") {
  testgen::TermGen gen(314159);
  auto cfg = gen.kbo();
  auto base = [&](const Term& a, const Term& b) { return term_compare(cfg, a, b); };
  for (int i = 0; i < 400; ++i) {
    std::vector<Term> m1, m2;
    int n1 = gen.pick(5), n2 = gen.pick(5);
    for (int k = 0; k < n1; ++k) m1.push_back(gen.term(2, 2));
    for (int k = 0; k < n2; ++k) m2.push_back(gen.term(2, 2));
    Cmp mine = multiset_extend(base, m1, m2);
    Cmp oracle = oracle_multiset(base, m1, m2);
    CHECK(mine == oracle);
    CHECK(multiset_extend(base, m2, m1) == flip(mine));
  }
}

TEST_CASE("literal comparison uses the two sided encoding") {
  auto cfg = bench_kbo();
  // a negative literal dominates the positive literal on the same terms
  CHECK(literal_compare(cfg, neq(B(), C()), eq(B(), C())) == Cmp::Greater);
  CHECK(literal_compare(cfg, eq(B(), C()), eq(C(), B())) == Cmp::Equal);
  CHECK(literal_compare(cfg, neq(B(), C()), neq(C(), B())) == Cmp::Equal);
  CHECK(literal_compare(cfg, eq(G(B()), D()), eq(F(C(), D()), C())) == Cmp::Greater);
  CHECK(literal_compare(cfg, eq(G(B()), D()), neq(F(C(), D()), C())) == Cmp::Greater);
  // the greater maximal term wins even against a doubled smaller one
  CHECK(literal_compare(cfg, eq(B(), B()), neq(C(), C())) == Cmp::Greater);
}

TEST_CASE("clause comparison on the benchmark clauses") {
  auto cfg = bench_kbo();
  Clause c7 = clause({eq(G(B()), D())});
  Clause c1_c = clause({eq(F(C(), D()), C())});
  Clause c2_cd = clause({neq(F(C(), D()), B()), eq(G(C()), D())});
  Clause c3 = clause({eq(Bp(), Cp()), eq(B(), C())});
  Clause c4 = clause({neq(G(Bp()), G(Cp()))});
  CHECK(clause_compare(cfg, c7, c1_c) == Cmp::Greater);
  CHECK(clause_compare(cfg, c7, c2_cd) == Cmp::Greater);
  CHECK(clause_compare(cfg, c7, c3) == Cmp::Greater);
  CHECK(clause_compare(cfg, c7, c4) == Cmp::Greater);
  CHECK(clause_compare(cfg, c7, c7) == Cmp::Equal);
  CHECK(clause_compare(cfg, c1_c, c7) == Cmp::Less);

  // with the light b the comparison flips: g(b) then weighs 4, f(c,d) six
  auto light = cfg;
  light.weights[S().b] = 1;
  CHECK(term_compare(light, F(C(), D()), G(B())) == Cmp::Greater);
  CHECK(clause_compare(light, c7, c2_cd) == Cmp::Less);
}

TEST_CASE("maximality flags") {
  auto cfg = bench_kbo();
  Clause c3 = clause({eq(Bp(), Cp()), eq(B(), C())});
  // b = c dominates b' = c' (weights 4,1 versus 2,1)
  CHECK(literal_maximal(cfg, c3, 1, true));
  CHECK(literal_maximal(cfg, c3, 1, false));
  CHECK(!literal_maximal(cfg, c3, 0, false));

  Clause dup = clause({eq(B(), C()), eq(C(), B())});
  CHECK(literal_maximal(cfg, dup, 0, false));
  CHECK(!literal_maximal(cfg, dup, 0, true));

  Clause single = clause({eq(B(), C())});
  CHECK(literal_maximal(cfg, single, 0, true));

  // incomparable literals are both maximal
  Clause inc = clause({eq(V(0), B()), eq(V(1), C())});
  CHECK(literal_maximal(cfg, inc, 0, true));
  CHECK(literal_maximal(cfg, inc, 1, true));
}
