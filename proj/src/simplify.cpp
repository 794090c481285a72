#include "dersat/simplify.hpp"

#include <stdexcept>

#include "dersat/unify.hpp"

namespace dersat {

RegimeConfig RegimeConfig::classical() {
  RegimeConfig r;
  r.regime = Regime::Classical;
  r.der = DerMode::Full;
  r.demod = DemodMode::Full;
  r.subsumption = SubsumeMode::FirstOrder;
  return r;
}

RegimeConfig RegimeConfig::horn_closure() {
  RegimeConfig r;
  r.regime = Regime::HornClosure;
  r.der = DerMode::Full;
  r.demod = DemodMode::ProperSubtermOnly;
  r.subsumption = SubsumeMode::Propositional;
  return r;
}

RegimeConfig RegimeConfig::non_horn_closure() {
  RegimeConfig r = horn_closure();
  r.regime = Regime::NonHornClosure;
  r.der = DerMode::NegativeOnly;
  return r;
}

std::vector<std::string> RegimeConfig::validate() const {
  std::vector<std::string> warnings;
  if (regime == Regime::Classical) {
    if (der != DerMode::Off)
      warnings.push_back(
          "destructive variable elimination is not justified by the "
          "classical redundancy criterion");
    if (der != DerMode::Off && subsumption == SubsumeMode::FirstOrder)
      warnings.push_back(
          "variable elimination combined with first-order subsumption has "
          "no completeness proof");
    if (der != DerMode::Off && demod == DemodMode::Full)
      warnings.push_back(
          "variable elimination combined with unrestricted demodulation has "
          "no completeness proof");
    return warnings;
  }
  if (demod == DemodMode::Full)
    throw std::invalid_argument(
        "unrestricted demodulation can enlarge the labeled normal form "
        "multiset; not licensed outside the classical regime");
  if (subsumption == SubsumeMode::FirstOrder)
    throw std::invalid_argument(
        "first-order subsumption can delete the smaller presentation; not "
        "licensed outside the classical regime");
  if (regime == Regime::NonHornClosure && der == DerMode::Full)
    throw std::invalid_argument(
        "eliminating variables that occur in positive literals is not "
        "licensed when clauses may have several positive literals");
  return warnings;
}

SimplificationOutcome SimplificationOutcome::deleted(Justification j) {
  SimplificationOutcome o;
  o.kind = SimpKind::Deleted;
  o.justification = std::move(j);
  return o;
}

SimplificationOutcome SimplificationOutcome::replaced(Clause c,
                                                      Justification j) {
  SimplificationOutcome o;
  o.kind = SimpKind::Replaced;
  o.replacement = std::move(c);
  o.justification = std::move(j);
  return o;
}

namespace {

// the variable side of an eliminable disequation, if any
bool der_candidate(const Clause& c, size_t i, DerMode mode, VarId* x,
                   Term* t) {
  const Literal& l = c.lits[i];
  if (l.positive) return false;
  for (int side = 0; side < 2; ++side) {
    const Term& a = side == 0 ? l.lhs : l.rhs;
    const Term& b = side == 0 ? l.rhs : l.lhs;
    if (!a.is_var()) continue;
    if (vars(b).count(a.var_id())) continue;
    if (mode == DerMode::NegativeOnly) {
      bool in_positive = false;
      for (const Literal& other : c.lits)
        if (other.positive && (vars(other.lhs).count(a.var_id()) ||
                               vars(other.rhs).count(a.var_id())))
          in_positive = true;
      if (in_positive) continue;
    }
    *x = a.var_id();
    *t = b;
    return true;
  }
  return false;
}

}  // namespace

SimplificationOutcome der(const Clause& c, DerMode mode) {
  if (mode == DerMode::Off) return SimplificationOutcome::unchanged();
  Clause cur = c;
  int eliminated = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t i = 0; i < cur.lits.size(); ++i) {
      VarId x = 0;
      Term t;
      if (!der_candidate(cur, i, mode, &x, &t)) continue;
      cur = apply(Substitution::single(x, t), without_literal(cur, i));
      ++eliminated;
      progress = true;
      break;
    }
  }
  if (eliminated == 0) return SimplificationOutcome::unchanged();
  Justification j{RuleTag::Der, {}, ""};
  j.note = std::to_string(eliminated) +
           " variable(s) eliminated, literals tried left to right";
  return SimplificationOutcome::replaced(std::move(cur), std::move(j));
}

namespace {

void collect_positions(const Term& t, Position prefix,
                       std::vector<std::pair<Position, Term>>& out) {
  out.emplace_back(prefix, t);
  if (t.is_var()) return;
  for (size_t i = 0; i < t.args().size(); ++i) {
    Position p = prefix;
    p.push_back(static_cast<int>(i + 1));
    collect_positions(t.args()[i], p, out);
  }
}

}  // namespace

SimplificationOutcome demodulate(const Clause& c, const Clause& unit,
                                 DemodMode mode, const OrderingConfig& cfg) {
  if (mode == DemodMode::Off) return SimplificationOutcome::unchanged();
  if (unit.lits.size() != 1 || !unit.lits[0].positive)
    throw std::invalid_argument("demodulation needs a positive unit equation");
  const Literal& eqn = unit.lits[0];
  for (int dir = 0; dir < 2; ++dir) {
    const Term& t = dir == 0 ? eqn.lhs : eqn.rhs;
    const Term& tp = dir == 0 ? eqn.rhs : eqn.lhs;
    if (dir == 1 && eqn.lhs == eqn.rhs) break;
    for (const Literal& l : c.lits) {
      for (int side = 0; side < 2; ++side) {
        std::vector<std::pair<Position, Term>> spots;
        collect_positions(l.side(side), {}, spots);
        for (const auto& [pos, sub] : spots) {
          (void)pos;
          if (sub.is_var()) continue;
          const auto sigma = match(t, sub);
          if (!sigma) continue;
          const Term repl = sigma->apply(tp);
          if (term_compare(cfg, sub, repl) != Cmp::Greater) continue;
          if (mode == DemodMode::ProperSubtermOnly &&
              !proper_superterm(sub, repl))
            continue;
          Justification j{RuleTag::Demodulation, {unit}, ""};
          return SimplificationOutcome::replaced(replace_all(c, sub, repl),
                                                 std::move(j));
        }
      }
    }
  }
  return SimplificationOutcome::unchanged();
}

SimplificationOutcome parallel_cond_rewrite(const Clause& c,
                                            const OrderingConfig& cfg) {
  for (size_t i = 0; i < c.lits.size(); ++i) {
    const Literal& cond = c.lits[i];
    if (cond.positive) continue;
    for (int dir = 0; dir < 2; ++dir) {
      const Term& t = cond.side(dir);
      const Term& tp = cond.side(1 - dir);
      if (term_compare(cfg, t, tp) != Cmp::Greater) continue;
      bool occurs = false;
      for (size_t jx = 0; jx < c.lits.size() && !occurs; ++jx) {
        if (jx == i) continue;
        occurs = contains_subterm(c.lits[jx].lhs, t) ||
                 contains_subterm(c.lits[jx].rhs, t);
      }
      if (!occurs) continue;
      Clause out;
      for (size_t jx = 0; jx < c.lits.size(); ++jx) {
        if (jx == i) {
          out.lits.push_back(c.lits[jx]);
          continue;
        }
        Clause one;
        one.lits.push_back(c.lits[jx]);
        out.lits.push_back(replace_all(one, t, tp).lits[0]);
      }
      Justification j{RuleTag::CondRewrite, {}, ""};
      return SimplificationOutcome::replaced(std::move(out), std::move(j));
    }
  }
  return SimplificationOutcome::unchanged();
}

namespace {

bool literal_submultiset(const std::vector<Literal>& small,
                         const std::vector<Literal>& big) {
  std::vector<bool> used(big.size(), false);
  for (const Literal& l : small) {
    bool found = false;
    for (size_t i = 0; i < big.size() && !found; ++i) {
      if (used[i] || !(big[i] == l)) continue;
      used[i] = true;
      found = true;
    }
    if (!found) return false;
  }
  return true;
}

// backtracking embedding of c's literals into distinct literals of d under a
// shared matcher
bool embed(const Clause& c, const Clause& d, size_t next,
           std::vector<bool>& used, const Substitution& sigma) {
  if (next == c.lits.size()) return true;
  const Literal& l = c.lits[next];
  for (size_t i = 0; i < d.lits.size(); ++i) {
    if (used[i]) continue;
    const Literal& m = d.lits[i];
    if (m.positive != l.positive) continue;
    for (int flip = 0; flip < 2; ++flip) {
      const auto s1 = match(l.lhs, m.side(flip), sigma);
      if (!s1) continue;
      const auto s2 = match(l.rhs, m.side(1 - flip), *s1);
      if (!s2) continue;
      used[i] = true;
      if (embed(c, d, next + 1, used, *s2)) return true;
      used[i] = false;
    }
  }
  return false;
}

}  // namespace

bool subsumes(const Clause& c, const Clause& d, SubsumeMode mode) {
  switch (mode) {
    case SubsumeMode::Off:
      return false;
    case SubsumeMode::Propositional:
      return c.lits.size() < d.lits.size() &&
             literal_submultiset(c.lits, d.lits);
    case SubsumeMode::FirstOrder: {
      if (c.lits.size() > d.lits.size()) return false;
      if (variant(c, d)) return false;
      std::vector<bool> used(d.lits.size(), false);
      return embed(c, d, 0, used, {});
    }
  }
  return false;
}

SimplificationOutcome condense(const Clause& c) {
  Clause cur = c;
  bool changed = false, progress = true;
  while (progress) {
    progress = false;
    for (size_t i = 0; i < cur.lits.size() && !progress; ++i) {
      if (!cur.lits[i].positive && cur.lits[i].lhs == cur.lits[i].rhs) {
        cur = without_literal(cur, i);
        changed = progress = true;
      }
    }
    for (size_t i = 0; i < cur.lits.size() && !progress; ++i)
      for (size_t jx = i + 1; jx < cur.lits.size() && !progress; ++jx)
        if (cur.lits[i] == cur.lits[jx]) {
          cur = without_literal(cur, jx);
          changed = progress = true;
        }
  }
  if (!changed) return SimplificationOutcome::unchanged();
  return SimplificationOutcome::replaced(std::move(cur),
                                         Justification{RuleTag::Condense, {}, ""});
}

}  // namespace dersat
