#include "dersat/closure.hpp"

#include <algorithm>
#include <stdexcept>

namespace dersat {

GroundClosure::GroundClosure(Clause c, Substitution t) : clause(std::move(c)) {
  theta = t.restricted_to(vars(clause));
  instance = apply(theta, clause);
  if (!instance.ground())
    throw std::invalid_argument("closure substitution does not ground " +
                                dersat::to_string(clause));
}

bool closure_equal(const GroundClosure& a, const GroundClosure& b) {
  if (!(a.instance == b.instance)) return false;
  return closure_key(a) == closure_key(b);
}

std::string closure_key(const GroundClosure& c) {
  return canonical_key(c.clause, &c.theta);
}

std::string to_string(const GroundClosure& c) {
  return dersat::to_string(c.clause) + " . " + dersat::to_string(c.theta);
}

bool clause_true_in(const GroundRewriteSystem& r, const Clause& ground_clause) {
  for (const Literal& l : ground_clause.lits) {
    bool same = normalize(r, l.lhs) == normalize(r, l.rhs);
    if (l.positive == same) return true;
  }
  return false;
}

bool closure_true_in(const GroundRewriteSystem& r, const GroundClosure& c) {
  return clause_true_in(r, c.instance);
}

namespace {

void add_labeled(std::map<Term, int, TermLess>& acc, const Term& t, int label) {
  auto [it, inserted] = acc.emplace(t, label);
  if (!inserted && it->second < label) it->second = label;
}

std::vector<LabeledTerm> to_sorted_vector(const std::map<Term, int, TermLess>& acc) {
  std::vector<LabeledTerm> out;
  out.reserve(acc.size());
  for (auto& [t, m] : acc) out.push_back(LabeledTerm{t, m});
  return out;
}

void sort_labeled(std::vector<LabeledTerm>& v) {
  std::sort(v.begin(), v.end(), [](const LabeledTerm& a, const LabeledTerm& b) {
    if (int c = syntactic_compare(a.t, b.t)) return c < 0;
    return a.label < b.label;
  });
}

}  // namespace

LssLts lss_lts(const Clause& c) {
  std::map<Term, int, TermLess> lss, lts;
  for (const Literal& l : c.lits) {
    for (const Term* side : {&l.lhs, &l.rhs}) {
      if (l.positive) {
        add_labeled(lts, *side, 0);
        for (const Term& sub : subterms(*side))
          add_labeled(lss, sub, sub == *side ? 0 : 1);
      } else {
        add_labeled(lts, *side, 2);
        for (const Term& sub : subterms(*side)) add_labeled(lss, sub, 2);
      }
    }
  }
  LssLts out{to_sorted_vector(lss), to_sorted_vector(lts)};
  return out;
}

SsTsNh ss_ts_nh(const Clause& c) {
  SsTsNh out;
  for (const Literal& l : c.lits) {
    if (l.positive) continue;
    for (const Term* side : {&l.lhs, &l.rhs}) {
      out.ts_neg.insert(*side);
      for (const Term& sub : subterms(*side)) out.ss_neg.insert(sub);
    }
  }
  return out;
}

namespace {

// instantiate a skeleton term, normalizing the arguments but not the top
Term instantiate_args_normalized(const GroundRewriteSystem& r,
                                 const Substitution& theta, const Term& t) {
  if (t.is_var()) return theta.apply(t);
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(normalize(r, theta.apply(a)));
  return Term::app(t.fun(), std::move(args));
}

}  // namespace

std::vector<LabeledTerm> nm_horn(const GroundRewriteSystem& r,
                                 const GroundClosure& c) {
  LssLts parts = lss_lts(c.clause);
  std::vector<LabeledTerm> out;
  for (const LabeledTerm& e : parts.lss) {
    Term inst = e.t.is_var() ? c.theta.apply(e.t)
                             : instantiate_args_normalized(r, c.theta, e.t);
    for (auto& red : rm_horn(r, inst, e.label)) out.push_back(red);
  }
  for (const LabeledTerm& e : parts.lts)
    out.push_back(LabeledTerm{normalize(r, c.theta.apply(e.t)), e.label});
  sort_labeled(out);
  return out;
}

Cmp pair_compare(const OrderingConfig& cfg, const TermPair& a, const TermPair& b) {
  auto base = [&cfg](const Term& s, const Term& t) {
    return term_compare(cfg, s, t);
  };
  return multiset_extend(base, std::vector<Term>{a.first, a.second},
                         std::vector<Term>{b.first, b.second});
}

std::string to_string(const TermPair& p) {
  return "{" + to_string(p.first) + "," + to_string(p.second) + "}";
}

std::string to_string(const std::vector<TermPair>& m) {
  std::string out = "{";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += ", ";
    out += to_string(m[i]);
  }
  return out + "}";
}

namespace {

TermPair make_pair_sorted(const Term& a, const Term& b) {
  if (syntactic_compare(a, b) <= 0) return {a, b};
  return {b, a};
}

void sort_pairs(std::vector<TermPair>& v) {
  std::sort(v.begin(), v.end(), [](const TermPair& a, const TermPair& b) {
    if (int c = syntactic_compare(a.first, b.first)) return c < 0;
    return syntactic_compare(a.second, b.second) < 0;
  });
}

}  // namespace

std::vector<TermPair> rm_nh(const GroundRewriteSystem& r, const Term& t) {
  std::vector<TermPair> out;
  for (auto& red : rm_horn(r, t, 2)) out.push_back({red.t, red.t});
  return out;
}

std::vector<TermPair> nm_nh(const GroundRewriteSystem& r, const GroundClosure& c) {
  SsTsNh parts = ss_ts_nh(c.clause);
  std::vector<TermPair> out;
  for (const Term& t : parts.ss_neg) {
    Term inst = t.is_var() ? c.theta.apply(t)
                           : instantiate_args_normalized(r, c.theta, t);
    for (auto& p : rm_nh(r, inst)) out.push_back(std::move(p));
  }
  for (const Term& t : parts.ts_neg) {
    Term nf = normalize(r, c.theta.apply(t));
    out.push_back({nf, nf});
  }
  for (const Literal& l : c.clause.lits) {
    if (!l.positive) continue;
    out.push_back(
        make_pair_sorted(c.theta.apply(l.lhs), c.theta.apply(l.rhs)));
  }
  sort_pairs(out);
  return out;
}

Cmp clo_tiebreak(const GroundClosure& a, const GroundClosure& b) {
  if (!(a.instance == b.instance))
    throw std::invalid_argument(
        "generality tiebreak is only defined for closures with equal instances");
  uint32_t fa = 0, fb = 0;
  for (const Literal& l : a.clause.lits) fa += l.lhs.fun_count() + l.rhs.fun_count();
  for (const Literal& l : b.clause.lits) fb += l.lhs.fun_count() + l.rhs.fun_count();
  if (fa != fb) return fa < fb ? Cmp::Greater : Cmp::Less;
  size_t va = vars(a.clause).size(), vb = vars(b.clause).size();
  if (va != vb) return va > vb ? Cmp::Greater : Cmp::Less;
  std::string ka = closure_key(a), kb = closure_key(b);
  if (ka == kb) return Cmp::Equal;
  return ka < kb ? Cmp::Greater : Cmp::Less;
}

Cmp nm_compare(const OrderingConfig& cfg, const GroundRewriteSystem& r,
               ClosureVariant variant, const GroundClosure& a,
               const GroundClosure& b) {
  if (variant == ClosureVariant::Horn) {
    auto base = [&cfg](const LabeledTerm& x, const LabeledTerm& y) {
      return labeled_compare(cfg, x, y);
    };
    return multiset_extend(base, nm_horn(r, a), nm_horn(r, b));
  }
  auto base = [&cfg](const TermPair& x, const TermPair& y) {
    return pair_compare(cfg, x, y);
  };
  return multiset_extend(base, nm_nh(r, a), nm_nh(r, b));
}

Cmp closure_compare(const OrderingConfig& cfg, const GroundRewriteSystem& r,
                    ClosureVariant variant, const GroundClosure& a,
                    const GroundClosure& b) {
  Cmp c = nm_compare(cfg, r, variant, a, b);
  if (c != Cmp::Equal) return c;
  c = clause_compare(cfg, a.instance, b.instance);
  if (c != Cmp::Equal) return c;
  return clo_tiebreak(a, b);
}

}  // namespace dersat
