#pragma once

#include <optional>
#include <vector>

#include "dersat/closure.hpp"
#include "dersat/congruence.hpp"
#include "dersat/inference.hpp"
#include "dersat/ordering.hpp"
#include "dersat/rewrite.hpp"
#include "dersat/term.hpp"

namespace dersat {

// Finite ground-term universe: every term over `signature` up to max_depth
// (constants have depth 0), plus the subterm closures of the seeds. The
// result is always closed under subterms.
struct UniverseBound {
  int max_depth = 1;
  size_t max_terms = 256;  // generation throws past this
  std::vector<FunId> signature;
  std::vector<Term> seeds;
};

// sorted and duplicate-free; throws length_error when the universe would
// exceed max_terms, invalid_argument on a non-ground seed
std::vector<Term> ground_universe(const UniverseBound& b);

// every (C . theta) with theta mapping vars(C) into the universe; a clause
// without variables yields exactly its trivial closure
std::vector<GroundClosure> ground_instances(const Clause& c,
                                            const UniverseBound& b);

// Streams every left-reduced rewrite system whose rules draw both sides from
// the universe and are oriented by cfg, each exactly once: ascending rule
// count, lexicographic in the canonical rule encoding within a count.
// Refuses universes with more than candidate_cap orientable pairs.
class LeftReducedStream {
 public:
  LeftReducedStream(const UniverseBound& b, const OrderingConfig& cfg,
                    size_t candidate_cap = 64);

  std::optional<GroundRewriteSystem> next();
  size_t candidate_count() const { return cands_.size(); }

 private:
  void fill_level();
  void extend(size_t start, size_t need, std::vector<size_t>& cur);

  std::vector<Rule> cands_;
  std::vector<std::vector<size_t>> level_;
  size_t pos_ = 0;
  size_t k_ = 0;
  bool done_ = false;
};

// convenience for tests and the lab CLI; same order as the stream
std::vector<GroundRewriteSystem> all_left_reduced(const UniverseBound& b,
                                                  const OrderingConfig& cfg,
                                                  size_t candidate_cap = 64);

// C follows from the members of n that are clause-smaller than C
bool classically_redundant(const OrderingConfig& cfg, const Clause& c,
                           const std::vector<Clause>& n);

// For every streamed system R: the closure holds in R, or some closure of n
// is closure-smaller under R and fails in R. Verdicts are relative to the
// bound; a countermodel system ends the scan early.
bool closure_redundant(const OrderingConfig& cfg, const GroundClosure& clo,
                       const std::vector<GroundClosure>& n,
                       const UniverseBound& b, ClosureVariant variant,
                       size_t candidate_cap = 64);

// For every streamed system R: the conclusion holds in R, or some closure of
// n is smaller than the right premise and fails in R, or a rewriting step of
// the inference is absent from R, or the rewriting premise is not strictly
// below the rewritten one.
bool inference_redundant(const OrderingConfig& cfg, const GroundInference& inf,
                         const std::vector<GroundClosure>& n,
                         const UniverseBound& b, ClosureVariant variant,
                         size_t candidate_cap = 64);

}  // namespace dersat
