#pragma once

#include <string>
#include <vector>

#include "dersat/clause.hpp"
#include "dersat/congruence.hpp"
#include "dersat/inference.hpp"
#include "dersat/ordering.hpp"

namespace dersat {

enum class DerMode { Off, NegativeOnly, Full };
enum class DemodMode { Off, ProperSubtermOnly, Full };
enum class SubsumeMode { Off, Propositional, FirstOrder };
enum class Regime { Classical, HornClosure, NonHornClosure };

// Which deletion and simplification devices run, and under which soundness
// story. The closure regimes reject strengths their ordering argument does
// not cover; Classical takes anything and only warns.
struct RegimeConfig {
  Regime regime = Regime::HornClosure;
  DerMode der = DerMode::Full;
  DemodMode demod = DemodMode::ProperSubtermOnly;
  SubsumeMode subsumption = SubsumeMode::Propositional;
  bool tautology = true;
  bool parallel_cond_rewrite = true;

  static RegimeConfig classical();
  static RegimeConfig horn_closure();
  static RegimeConfig non_horn_closure();

  // throws std::invalid_argument when a flag exceeds what the regime covers;
  // returns warnings for permitted-but-unproven combinations
  std::vector<std::string> validate() const;
};

struct Justification {
  RuleTag rule = RuleTag::Input;
  std::vector<Clause> sides;
  std::string note;
};

enum class SimpKind { Deleted, Replaced, Unchanged };

struct SimplificationOutcome {
  SimpKind kind = SimpKind::Unchanged;
  Clause replacement;  // set when kind == Replaced
  Justification justification;

  static SimplificationOutcome unchanged() { return {}; }
  static SimplificationOutcome deleted(Justification j);
  static SimplificationOutcome replaced(Clause c, Justification j);
};

// Eliminates x != t literals with x not in t by binding x to t. NegativeOnly
// additionally requires x to stay out of every positive literal. Literals are
// tried left to right and the scan restarts after each elimination.
SimplificationOutcome der(const Clause& c, DerMode mode);

// Rewrites with a positive unit equation: the first matched instance whose
// ordering check passes has all its occurrences in c replaced at once.
// ProperSubtermOnly demands the replacement be a proper subterm of the redex.
SimplificationOutcome demodulate(const Clause& c, const Clause& unit,
                                 DemodMode mode, const OrderingConfig& cfg);

// Uses a condition literal t != t' of c itself, t greater than t', to rewrite
// every occurrence of t in the remaining literals. The condition stays.
SimplificationOutcome parallel_cond_rewrite(const Clause& c,
                                            const OrderingConfig& cfg);

// Propositional: c a proper submultiset of d. FirstOrder: some sigma embeds
// c*sigma into d as a submultiset and c is not a variant of d.
bool subsumes(const Clause& c, const Clause& d, SubsumeMode mode);

// Drops trivially false disequations s != s and duplicate literals.
SimplificationOutcome condense(const Clause& c);

}  // namespace dersat
