#pragma once

#include <vector>

#include "dersat/clause.hpp"
#include "dersat/term.hpp"

namespace dersat {

// Congruence closure over a fixed finite universe of terms. Variables are
// treated as opaque constants. Cheap to copy; built once per query.
class Congruence {
 public:
  // universe is closed under subterms of the given terms
  explicit Congruence(const std::vector<Term>& universe_seeds);

  void assert_equal(const Term& a, const Term& b);
  bool same(const Term& a, const Term& b) const;

  const std::vector<Term>& universe() const { return terms_; }

 private:
  int id_of(const Term& t) const;
  int find(int i) const;
  void unite(int a, int b);
  void propagate();

  std::vector<Term> terms_;
  std::map<Term, int, TermLess> index_;
  mutable std::vector<int> parent_;
};

// entailment between ground clauses under equational semantics
bool ground_entails(const std::vector<Clause>& premises, const Clause& goal);

// satisfiability of a set of ground clauses
bool ground_sat(const std::vector<Clause>& clauses);

// valid clause: some positive literal follows from the negated negative ones.
// Complete for ground clauses; for clauses with variables it is a sound check
// with variables read as constants.
bool is_tautology(const Clause& c);

}  // namespace dersat
