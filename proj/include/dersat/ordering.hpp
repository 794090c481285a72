#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dersat/clause.hpp"
#include "dersat/term.hpp"

namespace dersat {

enum class Cmp { Greater, Less, Equal, Incomparable };

Cmp flip(Cmp c);
std::string to_string(Cmp c);

enum class OrderKind { Kbo, Lpo };

struct OrderingConfig {
  OrderKind kind = OrderKind::Kbo;
  std::map<FunId, uint64_t> weights;  // per function symbol (kbo only)
  uint64_t var_weight = 1;
  std::map<FunId, int> precedence;  // larger value = greater symbol

  int prec(FunId f) const;
  uint64_t weight_of(FunId f) const;
  // throws invalid_argument on inadmissible kbo parameters
  void validate() const;
};

// convenience for tests: precedence from greatest to least
std::map<FunId, int> precedence_desc(const std::vector<FunId>& desc);

uint64_t term_weight(const OrderingConfig& cfg, const Term& t);

Cmp term_compare(const OrderingConfig& cfg, const Term& s, const Term& t);
inline bool greater(const OrderingConfig& cfg, const Term& s, const Term& t) {
  return term_compare(cfg, s, t) == Cmp::Greater;
}

// Dershowitz-Manna extension of a (possibly partial) strict order given as a
// four-valued comparison. base(a, b) == Equal must be an equivalence.
template <typename T, typename F>
Cmp multiset_extend(F&& base, const std::vector<T>& m1, const std::vector<T>& m2) {
  std::vector<char> used_a(m1.size(), 0), used_b(m2.size(), 0);
  for (size_t i = 0; i < m1.size(); ++i) {
    for (size_t j = 0; j < m2.size(); ++j) {
      if (used_b[j]) continue;
      if (base(m1[i], m2[j]) == Cmp::Equal) {
        used_a[i] = used_b[j] = 1;
        break;
      }
    }
  }
  std::vector<size_t> rest_a, rest_b;
  for (size_t i = 0; i < m1.size(); ++i)
    if (!used_a[i]) rest_a.push_back(i);
  for (size_t j = 0; j < m2.size(); ++j)
    if (!used_b[j]) rest_b.push_back(j);
  if (rest_a.empty() && rest_b.empty()) return Cmp::Equal;

  bool gt = true;
  for (size_t j : rest_b) {
    bool dominated = false;
    for (size_t i : rest_a)
      if (base(m1[i], m2[j]) == Cmp::Greater) {
        dominated = true;
        break;
      }
    if (!dominated) {
      gt = false;
      break;
    }
  }
  if (gt) return Cmp::Greater;

  bool lt = true;
  for (size_t i : rest_a) {
    bool dominated = false;
    for (size_t j : rest_b)
      if (base(m1[i], m2[j]) == Cmp::Less) {
        dominated = true;
        break;
      }
    if (!dominated) {
      lt = false;
      break;
    }
  }
  return lt ? Cmp::Less : Cmp::Incomparable;
}

// literal encoding: s = t as {s, t}, s != t as {s, s, t, t}
std::vector<Term> literal_term_multiset(const Literal& l);

Cmp literal_compare(const OrderingConfig& cfg, const Literal& a, const Literal& b);
Cmp clause_compare(const OrderingConfig& cfg, const Clause& a, const Clause& b);

// no other literal of c is greater (strict: nor equal) than c.lits[idx]
bool literal_maximal(const OrderingConfig& cfg, const Clause& c, size_t idx,
                     bool strict);

}  // namespace dersat
