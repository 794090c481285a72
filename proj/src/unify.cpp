#include "dersat/unify.hpp"

namespace dersat {

UnifyResult mgu(std::vector<std::pair<Term, Term>> pairs) {
  Substitution sol;
  std::vector<std::pair<Term, Term>> work(std::move(pairs));
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    a = sol.apply(a);
    b = sol.apply(b);
    if (a == b) continue;
    if (a.is_var() || b.is_var()) {
      if (!a.is_var()) std::swap(a, b);
      if (contains_subterm(b, a)) return UnifyFail{UnifyFail::Occurs};
      // keep the solved set idempotent: eliminate a from existing bindings
      Substitution unit = Substitution::single(a.var_id(), b);
      sol = Substitution::compose(unit, sol);
      continue;
    }
    if (a.fun() != b.fun()) return UnifyFail{UnifyFail::Clash};
    for (size_t i = 0; i < a.args().size(); ++i)
      work.emplace_back(a.args()[i], b.args()[i]);
  }
  return sol;
}

UnifyResult mgu(const Term& a, const Term& b) {
  return mgu(std::vector<std::pair<Term, Term>>{{a, b}});
}

bool unifiable(const Term& a, const Term& b) {
  return std::holds_alternative<Substitution>(mgu(a, b));
}

std::optional<Substitution> match(const Term& pattern, const Term& target,
                                  Substitution seed) {
  if (pattern.is_var()) {
    const Term* bound = seed.find(pattern.var_id());
    if (bound) return (*bound == target) ? std::optional(seed) : std::nullopt;
    seed.bind(pattern.var_id(), target);
    return seed;
  }
  if (target.is_var() || pattern.fun() != target.fun()) return std::nullopt;
  for (size_t i = 0; i < pattern.args().size(); ++i) {
    auto next = match(pattern.args()[i], target.args()[i], std::move(seed));
    if (!next) return std::nullopt;
    seed = std::move(*next);
  }
  return seed;
}

}  // namespace dersat
