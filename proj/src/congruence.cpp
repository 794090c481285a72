#include "dersat/congruence.hpp"

#include <algorithm>
#include <stdexcept>

namespace dersat {

Congruence::Congruence(const std::vector<Term>& universe_seeds) {
  TermSet all;
  for (const Term& t : universe_seeds)
    for (const Term& s : subterms(t)) all.insert(s);
  terms_.assign(all.begin(), all.end());
  for (size_t i = 0; i < terms_.size(); ++i)
    index_[terms_[i]] = static_cast<int>(i);
  parent_.resize(terms_.size());
  for (size_t i = 0; i < terms_.size(); ++i) parent_[i] = static_cast<int>(i);
}

int Congruence::id_of(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end())
    throw std::invalid_argument("term outside the congruence universe: " +
                                to_string(t));
  return it->second;
}

int Congruence::find(int i) const {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

void Congruence::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a != b) parent_[a] = b;
}

void Congruence::propagate() {
  // congruence: equal arguments force equal applications
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < terms_.size(); ++i) {
      const Term& s = terms_[i];
      if (s.is_var() || s.args().empty()) continue;
      for (size_t j = i + 1; j < terms_.size(); ++j) {
        const Term& t = terms_[j];
        if (t.is_var() || s.fun() != t.fun()) continue;
        if (find(static_cast<int>(i)) == find(static_cast<int>(j))) continue;
        bool congruent = true;
        for (size_t k = 0; k < s.args().size(); ++k)
          if (find(id_of(s.args()[k])) != find(id_of(t.args()[k]))) {
            congruent = false;
            break;
          }
        if (congruent) {
          unite(static_cast<int>(i), static_cast<int>(j));
          changed = true;
        }
      }
    }
  }
}

void Congruence::assert_equal(const Term& a, const Term& b) {
  unite(id_of(a), id_of(b));
  propagate();
}

bool Congruence::same(const Term& a, const Term& b) const {
  return find(id_of(a)) == find(id_of(b));
}

namespace {

std::vector<Term> clause_terms(const std::vector<Clause>& clauses) {
  std::vector<Term> out;
  for (const Clause& c : clauses)
    for (const Literal& l : c.lits) {
      out.push_back(l.lhs);
      out.push_back(l.rhs);
    }
  return out;
}

struct SearchState {
  std::vector<std::pair<Term, Term>> eqs;
  std::vector<std::pair<Term, Term>> diseqs;
};

enum class LitVal { True, False, Unknown };

bool blocked(const Congruence& cc, const SearchState& st, const Term& a,
             const Term& b) {
  for (auto& [u, v] : st.diseqs) {
    if ((cc.same(u, a) && cc.same(v, b)) || (cc.same(u, b) && cc.same(v, a)))
      return true;
  }
  return false;
}

LitVal eval_literal(const Congruence& cc, const SearchState& st, const Literal& l) {
  if (cc.same(l.lhs, l.rhs)) return l.positive ? LitVal::True : LitVal::False;
  if (blocked(cc, st, l.lhs, l.rhs)) return l.positive ? LitVal::False : LitVal::True;
  return LitVal::Unknown;
}

// satisfiability search; the universe is shared, the assignment is copied
// per branch
bool sat_rec(const std::vector<Term>& universe, const std::vector<Clause>& clauses,
             SearchState st, int depth) {
  if (depth > 64) throw std::runtime_error("ground satisfiability: depth limit");
  for (;;) {
    Congruence cc(universe);
    for (auto& [a, b] : st.eqs) cc.assert_equal(a, b);
    for (auto& [a, b] : st.diseqs)
      if (cc.same(a, b)) return false;

    bool all_satisfied = true;
    const Clause* split_clause = nullptr;
    const Literal* unit = nullptr;
    for (const Clause& c : clauses) {
      bool satisfied = false;
      std::vector<const Literal*> open;
      for (const Literal& l : c.lits) {
        LitVal v = eval_literal(cc, st, l);
        if (v == LitVal::True) {
          satisfied = true;
          break;
        }
        if (v == LitVal::Unknown) open.push_back(&l);
      }
      if (satisfied) continue;
      if (open.empty()) return false;
      all_satisfied = false;
      if (open.size() == 1 && !unit) unit = open[0];
      if (!split_clause ||
          c.symbol_count() > split_clause->symbol_count())
        split_clause = &c;
    }
    if (all_satisfied) return true;
    if (unit) {
      if (unit->positive)
        st.eqs.emplace_back(unit->lhs, unit->rhs);
      else
        st.diseqs.emplace_back(unit->lhs, unit->rhs);
      continue;
    }
    // split on the first open literal of the largest unresolved clause
    Congruence cc2(universe);
    for (auto& [a, b] : st.eqs) cc2.assert_equal(a, b);
    const Literal* pick = nullptr;
    for (const Literal& l : split_clause->lits)
      if (eval_literal(cc2, st, l) == LitVal::Unknown) {
        pick = &l;
        break;
      }
    SearchState pos = st, neg = st;
    if (pick->positive) {
      pos.eqs.emplace_back(pick->lhs, pick->rhs);
      neg.diseqs.emplace_back(pick->lhs, pick->rhs);
    } else {
      pos.diseqs.emplace_back(pick->lhs, pick->rhs);
      neg.eqs.emplace_back(pick->lhs, pick->rhs);
    }
    return sat_rec(universe, clauses, std::move(pos), depth + 1) ||
           sat_rec(universe, clauses, std::move(neg), depth + 1);
  }
}

}  // namespace

bool ground_sat(const std::vector<Clause>& clauses) {
  for (const Clause& c : clauses)
    if (!c.ground())
      throw std::invalid_argument("satisfiability check needs ground clauses, got " +
                                  to_string(c));
  return sat_rec(clause_terms(clauses), clauses, SearchState{}, 0);
}

bool ground_entails(const std::vector<Clause>& premises, const Clause& goal) {
  std::vector<Clause> clauses = premises;
  for (const Literal& l : goal.lits)
    clauses.push_back(Clause{{Literal{l.lhs, l.rhs, !l.positive}}});
  return !ground_sat(clauses);
}

bool is_tautology(const Clause& c) {
  std::vector<Term> seeds;
  for (const Literal& l : c.lits) {
    seeds.push_back(l.lhs);
    seeds.push_back(l.rhs);
  }
  Congruence cc(seeds);
  for (const Literal& l : c.lits)
    if (!l.positive) cc.assert_equal(l.lhs, l.rhs);
  for (const Literal& l : c.lits)
    if (l.positive && cc.same(l.lhs, l.rhs)) return true;
  return false;
}

}  // namespace dersat
