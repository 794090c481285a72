#pragma once

#include <random>

#include "dersat/clause.hpp"
#include "dersat/ordering.hpp"
#include "dersat/term.hpp"

// Deterministic random generators for property tests. All symbols live in a
// test-only corner of the signature so they cannot collide with problem
// symbols of other suites.
namespace dersat::testgen {

struct TermGen {
  std::mt19937 rng;
  FunId rf, rg, rh, ra, rb, rc;

  explicit TermGen(uint32_t seed) : rng(seed) {
    auto& sig = Signature::instance();
    rf = sig.intern("rf", 2);
    rg = sig.intern("rg", 1);
    rh = sig.intern("rh", 1);
    ra = sig.intern("ra", 0);
    rb = sig.intern("rb", 0);
    rc = sig.intern("rc", 0);
  }

  int pick(int n) { return static_cast<int>(rng() % static_cast<uint32_t>(n)); }

  Term constant() {
    switch (pick(3)) {
      case 0: return Term::app(ra);
      case 1: return Term::app(rb);
      default: return Term::app(rc);
    }
  }

  Term term(int depth, int nvars = 3) {
    if (depth <= 0 || pick(4) == 0) {
      if (nvars > 0 && pick(3) == 0) return Term::var(pick(nvars));
      return constant();
    }
    switch (pick(3)) {
      case 0: return Term::app(rg, {term(depth - 1, nvars)});
      case 1: return Term::app(rh, {term(depth - 1, nvars)});
      default:
        return Term::app(rf, {term(depth - 1, nvars), term(depth - 1, nvars)});
    }
  }

  Term ground(int depth) { return term(depth, 0); }

  Literal literal(int depth, int nvars = 3) {
    return Literal{term(depth, nvars), term(depth, nvars), pick(2) == 0};
  }

  Clause clause(int max_lits, int depth, int nvars = 3) {
    Clause c;
    int n = 1 + pick(max_lits);
    for (int i = 0; i < n; ++i) c.lits.push_back(literal(depth, nvars));
    return c;
  }

  Substitution ground_subst(const std::set<VarId>& dom, int depth) {
    Substitution s;
    for (VarId v : dom) s.bind(v, ground(depth));
    return s;
  }

  OrderingConfig kbo() const {
    OrderingConfig cfg;
    cfg.kind = OrderKind::Kbo;
    cfg.var_weight = 1;
    cfg.weights = {{rf, 1}, {rg, 1}, {rh, 2}, {ra, 1}, {rb, 2}, {rc, 1}};
    cfg.precedence = precedence_desc({rf, rg, rh, rb, rc, ra});
    return cfg;
  }

  OrderingConfig lpo() const {
    OrderingConfig cfg;
    cfg.kind = OrderKind::Lpo;
    cfg.precedence = precedence_desc({rf, rg, rh, rb, rc, ra});
    return cfg;
  }
};

}  // namespace dersat::testgen
