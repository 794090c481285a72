#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dersat/term.hpp"

namespace dersat {

// Equational literal. The sides are an unordered pair for equality purposes;
// lhs/rhs order is kept as written for printing and positions.
struct Literal {
  Term lhs, rhs;
  bool positive = true;

  Term side(int i) const { return i == 0 ? lhs : rhs; }
  bool operator==(const Literal& o) const;
  bool operator!=(const Literal& o) const { return !(*this == o); }
};

Literal eq(Term a, Term b);
Literal neq(Term a, Term b);

// deterministic order for sorting; identifies flipped sides
int literal_syntactic_compare(const Literal& a, const Literal& b);

// Clause = multiset of literals; the empty clause is the contradiction.
struct Clause {
  std::vector<Literal> lits;

  bool empty() const { return lits.empty(); }
  size_t size() const { return lits.size(); }
  bool ground() const;
  bool horn() const;  // at most one positive literal
  uint32_t symbol_count() const;

  // multiset equality modulo side flips
  bool operator==(const Clause& o) const;
  bool operator!=(const Clause& o) const { return !(*this == o); }
};

Clause clause(std::vector<Literal> lits);

std::set<VarId> vars(const Clause& c);
Clause apply(const Substitution& s, const Clause& c);
Literal apply(const Substitution& s, const Literal& l);

// literal index + side (0=lhs, 1=rhs) + path inside that side
struct ClausePosition {
  size_t lit;
  int side;
  Position pos;
};

// every position at which t occurs as a subterm of C (duplicate-free)
std::vector<ClausePosition> occurrences(const Term& t, const Clause& c);
Clause replace_all(const Clause& c, const Term& t, const Term& repl);
Term subterm_at(const Clause& c, const ClausePosition& p);

Clause without_literal(const Clause& c, size_t idx);

// renames vars of c to fresh ids starting at next_var (updated)
Clause rename_apart(const Clause& c, VarId& next_var);
// renames vars to 0..n-1 by first occurrence
Clause normalize_vars(const Clause& c);

// equal up to bijective variable renaming
bool variant(const Clause& a, const Clause& b);
// all bijective renamings rho (as substitutions on vars(a)) with a*rho == b
std::vector<Substitution> variant_maps(const Clause& a, const Clause& b);

std::string to_string(const Literal& l);
std::string to_string(const Literal& l, const std::map<VarId, std::string>& names);
std::string to_string(const Clause& c);
std::string to_string(const Clause& c, const std::map<VarId, std::string>& names);

// Renaming-invariant canonical key: the minimum over literal permutations and
// side orders of the clause rendering with variables numbered by first
// occurrence. theta, when given, is appended in numbering order, which makes
// the key separate closures exactly up to closure equality.
std::string canonical_key(const Clause& c, const Substitution* theta = nullptr);

}  // namespace dersat
