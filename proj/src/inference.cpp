#include "dersat/inference.hpp"

#include <stdexcept>
#include <utility>

#include "dersat/unify.hpp"

namespace dersat {

std::string to_string(RuleTag tag) {
  switch (tag) {
    case RuleTag::Input: return "input";
    case RuleTag::Superposition: return "sup";
    case RuleTag::EqResolution: return "eqres";
    case RuleTag::EqFactoring: return "eqfact";
    case RuleTag::GroundSuperposition: return "gsup";
    case RuleTag::GroundSuperpositionVar: return "gsupv";
    case RuleTag::GroundEqResolution: return "geqres";
    case RuleTag::GroundEqFactoring: return "geqfact";
    case RuleTag::Der: return "der";
    case RuleTag::Demodulation: return "demod";
    case RuleTag::CondRewrite: return "condrw";
    case RuleTag::Subsumption: return "subsume";
    case RuleTag::Tautology: return "taut";
    case RuleTag::Condense: return "condense";
    case RuleTag::Oracle: return "oracle";
  }
  return "?";
}

namespace {

bool not_leq(Cmp c) { return c == Cmp::Greater || c == Cmp::Incomparable; }

std::vector<Term> nonvar_subterms(const Clause& c) {
  TermSet seen;
  for (const auto& lit : c.lits)
    for (int side = 0; side < 2; ++side)
      for (const auto& t : subterms(lit.side(side)))
        if (!t.is_var()) seen.insert(t);
  return std::vector<Term>(seen.begin(), seen.end());
}

void check_disjoint(const Clause& a, const Clause& b) {
  const auto va = vars(a);
  for (VarId v : vars(b))
    if (va.count(v)) throw std::invalid_argument("premises share variables");
}

// both reading directions of a positive literal, mirror skipped when trivial
std::vector<std::pair<Term, Term>> orientations(const Literal& l) {
  std::vector<std::pair<Term, Term>> out{{l.lhs, l.rhs}};
  if (!(l.lhs == l.rhs)) out.emplace_back(l.rhs, l.lhs);
  return out;
}

// an occurrence outside the top of a positive literal obliges the guard
bool guard_triggered(const Clause& c, const std::vector<ClausePosition>& occs) {
  for (const auto& o : occs)
    if (!c.lits[o.lit].positive || !o.pos.empty()) return true;
  return false;
}

Substitution merge_thetas(const GroundClosure& left, const GroundClosure& right) {
  Substitution th = left.theta;
  for (const auto& [v, t] : right.theta.map()) th.bind(v, t);
  return th;
}

}  // namespace

std::vector<Inference> superposition(const OrderingConfig& cfg, const Clause& left,
                                     const Clause& right, bool guard_always) {
  check_disjoint(left, right);
  std::vector<Inference> out;
  const std::vector<Term> cands = nonvar_subterms(right);
  for (size_t i = 0; i < left.lits.size(); ++i) {
    if (!left.lits[i].positive) continue;
    for (const auto& [t, tp] : orientations(left.lits[i])) {
      for (const Term& u : cands) {
        auto res = mgu(t, u);
        const auto* sig = std::get_if<Substitution>(&res);
        if (!sig) continue;
        const Substitution& sigma = *sig;
        const auto occs = occurrences(u, right);
        const Clause left_s = apply(sigma, left);
        const Clause right_s = apply(sigma, right);

        if (guard_always || guard_triggered(right, occs)) {
          const Cmp g = clause_compare(cfg, right_s, left_s);
          if (g == Cmp::Less || g == Cmp::Equal) continue;
        }
        if (!literal_maximal(cfg, left_s, i, true)) continue;
        if (!not_leq(term_compare(cfg, sigma.apply(t), sigma.apply(tp)))) continue;

        bool witness = false;
        for (const auto& o : occs) {
          const Literal& l = right.lits[o.lit];
          if (!literal_maximal(cfg, right_s, o.lit, l.positive)) continue;
          const Term s = sigma.apply(l.side(o.side));
          const Term sp = sigma.apply(l.side(1 - o.side));
          if (!not_leq(term_compare(cfg, s, sp))) continue;
          witness = true;
          break;
        }
        if (!witness) continue;

        Clause concl = without_literal(left, i);
        const Clause rew = replace_all(right, u, tp);
        concl.lits.insert(concl.lits.end(), rew.lits.begin(), rew.lits.end());
        concl = apply(sigma, concl);
        out.push_back({RuleTag::Superposition, {left, right}, std::move(concl),
                       sigma, occs});
      }
    }
  }
  return out;
}

std::vector<Inference> eq_resolution(const OrderingConfig& cfg, const Clause& c) {
  std::vector<Inference> out;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    const Literal& l = c.lits[i];
    if (l.positive) continue;
    auto res = mgu(l.lhs, l.rhs);
    const auto* sig = std::get_if<Substitution>(&res);
    if (!sig) continue;
    const Substitution& sigma = *sig;
    if (!literal_maximal(cfg, apply(sigma, c), i, false)) continue;
    out.push_back({RuleTag::EqResolution,
                   {c},
                   apply(sigma, without_literal(c, i)),
                   sigma,
                   {ClausePosition{i, 0, {}}}});
  }
  return out;
}

std::vector<Inference> eq_factoring(const OrderingConfig& cfg, const Clause& c) {
  std::vector<Inference> out;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (!c.lits[i].positive) continue;
    for (size_t j = 0; j < c.lits.size(); ++j) {
      if (j == i || !c.lits[j].positive) continue;
      for (const auto& [s, sp] : orientations(c.lits[i])) {
        for (const auto& [r, rp] : orientations(c.lits[j])) {
          auto res = mgu(s, r);
          const auto* sig = std::get_if<Substitution>(&res);
          if (!sig) continue;
          const Substitution& sigma = *sig;
          if (!not_leq(term_compare(cfg, sigma.apply(s), sigma.apply(sp))))
            continue;
          if (!literal_maximal(cfg, apply(sigma, c), i, false)) continue;
          Clause concl;
          for (size_t k = 0; k < c.lits.size(); ++k)
            if (k != i && k != j) concl.lits.push_back(c.lits[k]);
          concl.lits.push_back(neq(sp, rp));
          concl.lits.push_back(eq(r, rp));
          concl = apply(sigma, concl);
          out.push_back({RuleTag::EqFactoring,
                         {c},
                         std::move(concl),
                         sigma,
                         {ClausePosition{i, 0, {}}, ClausePosition{j, 0, {}}}});
        }
      }
    }
  }
  return out;
}

std::vector<GroundInference> ground_superposition(const OrderingConfig& cfg,
                                                  const GroundClosure& left,
                                                  const GroundClosure& right) {
  check_disjoint(left.clause, right.clause);
  const Substitution theta = merge_thetas(left, right);
  std::vector<GroundInference> out;
  const std::vector<Term> cands = nonvar_subterms(right.clause);
  for (size_t i = 0; i < left.clause.lits.size(); ++i) {
    const Literal& dl = left.clause.lits[i];
    if (!dl.positive) continue;
    for (const auto& [t, tp] : orientations(dl)) {
      const Term t_inst = theta.apply(t);
      const Term tp_inst = theta.apply(tp);
      if (term_compare(cfg, t_inst, tp_inst) != Cmp::Greater) continue;
      if (!literal_maximal(cfg, left.instance, i, true)) continue;
      for (const Term& u : cands) {
        if (!(theta.apply(u) == t_inst)) continue;
        auto res = mgu(t, u);
        const auto* sig = std::get_if<Substitution>(&res);
        if (!sig) continue;
        const Substitution& sigma = *sig;
        const auto occs = occurrences(u, right.clause);

        if (guard_triggered(right.clause, occs) &&
            clause_compare(cfg, left.instance, right.instance) != Cmp::Less)
          continue;

        bool witness = false;
        for (const auto& o : occs) {
          const Literal& l = right.clause.lits[o.lit];
          if (!literal_maximal(cfg, right.instance, o.lit, l.positive)) continue;
          const Term s_inst = theta.apply(l.side(o.side));
          const Term sp_inst = theta.apply(l.side(1 - o.side));
          if (term_compare(cfg, s_inst, sp_inst) != Cmp::Greater) continue;
          witness = true;
          break;
        }
        if (!witness) continue;

        Clause concl = without_literal(left.clause, i);
        const Clause rew = replace_all(right.clause, u, tp);
        concl.lits.insert(concl.lits.end(), rew.lits.begin(), rew.lits.end());
        concl = apply(sigma, concl);
        out.push_back({RuleTag::GroundSuperposition,
                       {left, right},
                       GroundClosure(std::move(concl), theta),
                       sigma,
                       Rule{t_inst, tp_inst}});
      }
    }
  }
  return out;
}

std::vector<GroundInference> ground_superposition_var(const OrderingConfig& cfg,
                                                      const GroundClosure& left,
                                                      const GroundClosure& right) {
  check_disjoint(left.clause, right.clause);
  std::vector<GroundInference> out;
  for (size_t i = 0; i < left.clause.lits.size(); ++i) {
    const Literal& dl = left.clause.lits[i];
    if (!dl.positive) continue;
    for (const auto& [t, tp] : orientations(dl)) {
      const Term t_inst = left.theta.apply(t);
      const Term tp_inst = left.theta.apply(tp);
      if (term_compare(cfg, t_inst, tp_inst) != Cmp::Greater) continue;
      if (!literal_maximal(cfg, left.instance, i, true)) continue;
      for (VarId x : vars(right.clause)) {
        const Term* bound = right.theta.find(x);
        if (!bound) continue;
        const Term x_inst = *bound;
        const auto occs = occurrences(Term::var(x), right.clause);

        if (guard_triggered(right.clause, occs) &&
            clause_compare(cfg, left.instance, right.instance) != Cmp::Less)
          continue;

        bool witness = false;
        for (const auto& o : occs) {
          const Literal& l = right.clause.lits[o.lit];
          if (!literal_maximal(cfg, right.instance, o.lit, l.positive)) continue;
          const Term s_inst = right.theta.apply(l.side(o.side));
          const Term sp_inst = right.theta.apply(l.side(1 - o.side));
          if (term_compare(cfg, s_inst, sp_inst) != Cmp::Greater) continue;
          witness = true;
          break;
        }
        if (!witness) continue;

        // one inference per redex occurrence inside the binding of x
        for (const Position& q : term_occurrences(x_inst, t_inst)) {
          Substitution theta2 = merge_thetas(left, right);
          theta2.bind(x, replace_at(x_inst, q, tp_inst));
          Clause concl = without_literal(left.clause, i);
          concl.lits.insert(concl.lits.end(), right.clause.lits.begin(),
                            right.clause.lits.end());
          out.push_back({RuleTag::GroundSuperpositionVar,
                         {left, right},
                         GroundClosure(std::move(concl), theta2),
                         Substitution{},
                         Rule{t_inst, tp_inst}});
        }
      }
    }
  }
  return out;
}

std::vector<GroundInference> ground_eq_resolution(const OrderingConfig& cfg,
                                                  const GroundClosure& c) {
  std::vector<GroundInference> out;
  for (size_t i = 0; i < c.clause.lits.size(); ++i) {
    const Literal& l = c.clause.lits[i];
    if (l.positive) continue;
    if (!(c.theta.apply(l.lhs) == c.theta.apply(l.rhs))) continue;
    auto res = mgu(l.lhs, l.rhs);
    const auto* sig = std::get_if<Substitution>(&res);
    if (!sig) continue;
    const Substitution& sigma = *sig;
    if (!literal_maximal(cfg, c.instance, i, false)) continue;
    out.push_back({RuleTag::GroundEqResolution,
                   {c},
                   GroundClosure(apply(sigma, without_literal(c.clause, i)),
                                 c.theta),
                   sigma,
                   std::nullopt});
  }
  return out;
}

std::vector<GroundInference> ground_eq_factoring(const OrderingConfig& cfg,
                                                 const GroundClosure& c) {
  std::vector<GroundInference> out;
  for (size_t i = 0; i < c.clause.lits.size(); ++i) {
    if (!c.clause.lits[i].positive) continue;
    for (size_t j = 0; j < c.clause.lits.size(); ++j) {
      if (j == i || !c.clause.lits[j].positive) continue;
      for (const auto& [s, sp] : orientations(c.clause.lits[i])) {
        for (const auto& [r, rp] : orientations(c.clause.lits[j])) {
          if (!(c.theta.apply(s) == c.theta.apply(r))) continue;
          auto res = mgu(s, r);
          const auto* sig = std::get_if<Substitution>(&res);
          if (!sig) continue;
          const Substitution& sigma = *sig;
          if (term_compare(cfg, c.theta.apply(s), c.theta.apply(sp)) !=
              Cmp::Greater)
            continue;
          if (!literal_maximal(cfg, c.instance, i, false)) continue;
          Clause concl;
          for (size_t k = 0; k < c.clause.lits.size(); ++k)
            if (k != i && k != j) concl.lits.push_back(c.clause.lits[k]);
          concl.lits.push_back(neq(sp, rp));
          concl.lits.push_back(eq(r, rp));
          concl = apply(sigma, concl);
          out.push_back({RuleTag::GroundEqFactoring,
                         {c},
                         GroundClosure(std::move(concl), c.theta),
                         sigma,
                         std::nullopt});
        }
      }
    }
  }
  return out;
}

}  // namespace dersat
