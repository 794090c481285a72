#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dersat/clause.hpp"
#include "dersat/ordering.hpp"
#include "dersat/rewrite.hpp"
#include "dersat/term.hpp"

namespace dersat {

// A clause together with a grounding substitution for its variables. The
// same ground instance can be presented by many closures; the ordering on
// closures depends on the split, not just the instance.
struct GroundClosure {
  Clause clause;
  Substitution theta;  // restricted to vars(clause)
  Clause instance;

  GroundClosure() = default;
  GroundClosure(Clause c, Substitution t);
};

bool closure_equal(const GroundClosure& a, const GroundClosure& b);
// renaming-invariant identity key; equal keys exactly for equal closures
std::string closure_key(const GroundClosure& c);
std::string to_string(const GroundClosure& c);

// truth of a ground clause under the convergent rewrite system r
bool clause_true_in(const GroundRewriteSystem& r, const Clause& ground_clause);
bool closure_true_in(const GroundRewriteSystem& r, const GroundClosure& c);

// ---- skeleton term collections ----

// labeled subterm and top collections of a clause: label 2 for negative
// occurrences, 1 for positions strictly below a positive top, 0 for positive
// tops; each term keeps its greatest applicable label
struct LssLts {
  std::vector<LabeledTerm> lss;
  std::vector<LabeledTerm> lts;
};
LssLts lss_lts(const Clause& c);

// negative-side subterms and negative tops, as plain sets
struct SsTsNh {
  TermSet ss_neg;
  TermSet ts_neg;
};
SsTsNh ss_ts_nh(const Clause& c);

// ---- normalization multisets ----

// labeled variant: redexes contracted while normalizing the instance,
// labels steering how top redexes of positive tops are counted
std::vector<LabeledTerm> nm_horn(const GroundRewriteSystem& r,
                                 const GroundClosure& c);

// unordered pair of ground terms, the element shape of the unlabeled variant
using TermPair = std::pair<Term, Term>;

Cmp pair_compare(const OrderingConfig& cfg, const TermPair& a, const TermPair& b);
std::string to_string(const TermPair& p);
std::string to_string(const std::vector<TermPair>& m);

std::vector<TermPair> rm_nh(const GroundRewriteSystem& r, const Term& t);
std::vector<TermPair> nm_nh(const GroundRewriteSystem& r, const GroundClosure& c);

// ---- the closure ordering ----

enum class ClosureVariant { Horn, NonHorn };

// last tiebreak layer: defined only for closures with equal instances; more
// general presentations are greater
Cmp clo_tiebreak(const GroundClosure& a, const GroundClosure& b);

// lexicographic: normalization multiset, then instance clauses, then the
// generality tiebreak
Cmp closure_compare(const OrderingConfig& cfg, const GroundRewriteSystem& r,
                    ClosureVariant variant, const GroundClosure& a,
                    const GroundClosure& b);

Cmp nm_compare(const OrderingConfig& cfg, const GroundRewriteSystem& r,
               ClosureVariant variant, const GroundClosure& a,
               const GroundClosure& b);

}  // namespace dersat
