#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "dersat/term.hpp"

namespace dersat {

struct UnifyFail {
  enum Kind { Clash, Occurs } kind;
};

using UnifyResult = std::variant<Substitution, UnifyFail>;

// Most general unifier of all pairs simultaneously. The result is idempotent.
UnifyResult mgu(std::vector<std::pair<Term, Term>> pairs);
UnifyResult mgu(const Term& a, const Term& b);

bool unifiable(const Term& a, const Term& b);

// One-sided matching: find sigma with pattern*sigma == target. Bindings in
// 'seed' are respected and extended.
std::optional<Substitution> match(const Term& pattern, const Term& target,
                                  Substitution seed = {});

}  // namespace dersat
