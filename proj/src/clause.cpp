#include "dersat/clause.hpp"

#include <algorithm>
#include <stdexcept>

namespace dersat {

bool Literal::operator==(const Literal& o) const {
  if (positive != o.positive) return false;
  return (lhs == o.lhs && rhs == o.rhs) || (lhs == o.rhs && rhs == o.lhs);
}

Literal eq(Term a, Term b) { return Literal{std::move(a), std::move(b), true}; }
Literal neq(Term a, Term b) { return Literal{std::move(a), std::move(b), false}; }

namespace {

// sides ordered so that the smaller one comes first
std::pair<const Term*, const Term*> sorted_sides(const Literal& l) {
  if (syntactic_compare(l.lhs, l.rhs) <= 0) return {&l.lhs, &l.rhs};
  return {&l.rhs, &l.lhs};
}

}  // namespace

int literal_syntactic_compare(const Literal& a, const Literal& b) {
  if (a.positive != b.positive) return a.positive ? 1 : -1;
  auto [a1, a2] = sorted_sides(a);
  auto [b1, b2] = sorted_sides(b);
  if (int c = syntactic_compare(*a1, *b1)) return c;
  return syntactic_compare(*a2, *b2);
}

bool Clause::ground() const {
  for (const auto& l : lits)
    if (!l.lhs.ground() || !l.rhs.ground()) return false;
  return true;
}

bool Clause::horn() const {
  int pos = 0;
  for (const auto& l : lits) pos += l.positive ? 1 : 0;
  return pos <= 1;
}

uint32_t Clause::symbol_count() const {
  uint32_t n = 0;
  for (const auto& l : lits) n += l.lhs.size() + l.rhs.size();
  return n;
}

bool Clause::operator==(const Clause& o) const {
  if (lits.size() != o.lits.size()) return false;
  auto a = lits, b = o.lits;
  auto cmp = [](const Literal& x, const Literal& y) {
    return literal_syntactic_compare(x, y) < 0;
  };
  std::sort(a.begin(), a.end(), cmp);
  std::sort(b.begin(), b.end(), cmp);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Clause clause(std::vector<Literal> lits) { return Clause{std::move(lits)}; }

std::set<VarId> vars(const Clause& c) {
  std::set<VarId> out;
  for (const auto& l : c.lits) {
    collect_vars(l.lhs, out);
    collect_vars(l.rhs, out);
  }
  return out;
}

Literal apply(const Substitution& s, const Literal& l) {
  return Literal{s.apply(l.lhs), s.apply(l.rhs), l.positive};
}

Clause apply(const Substitution& s, const Clause& c) {
  Clause out;
  out.lits.reserve(c.lits.size());
  for (const auto& l : c.lits) out.lits.push_back(apply(s, l));
  return out;
}

std::vector<ClausePosition> occurrences(const Term& t, const Clause& c) {
  std::vector<ClausePosition> out;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    for (int side = 0; side < 2; ++side) {
      for (auto& p : term_occurrences(c.lits[i].side(side), t))
        out.push_back(ClausePosition{i, side, std::move(p)});
    }
  }
  return out;
}

namespace {

Term replace_everywhere(const Term& s, const Term& t, const Term& repl) {
  if (s == t) return repl;
  if (s.is_var() || s.args().empty()) return s;
  if (s.size() <= t.size()) return s;
  std::vector<Term> args;
  args.reserve(s.args().size());
  bool changed = false;
  for (const auto& a : s.args()) {
    args.push_back(replace_everywhere(a, t, repl));
    if (!(args.back() == a)) changed = true;
  }
  if (!changed) return s;
  return Term::app(s.fun(), std::move(args));
}

}  // namespace

Clause replace_all(const Clause& c, const Term& t, const Term& repl) {
  Clause out;
  out.lits.reserve(c.lits.size());
  for (const auto& l : c.lits)
    out.lits.push_back(Literal{replace_everywhere(l.lhs, t, repl),
                               replace_everywhere(l.rhs, t, repl), l.positive});
  return out;
}

Term subterm_at(const Clause& c, const ClausePosition& p) {
  if (p.lit >= c.lits.size()) throw std::out_of_range("subterm_at: literal index");
  return subterm_at(c.lits[p.lit].side(p.side), p.pos);
}

Clause without_literal(const Clause& c, size_t idx) {
  Clause out;
  out.lits.reserve(c.lits.size() - 1);
  for (size_t i = 0; i < c.lits.size(); ++i)
    if (i != idx) out.lits.push_back(c.lits[i]);
  return out;
}

Clause rename_apart(const Clause& c, VarId& next_var) {
  Substitution s;
  for (VarId v : vars(c)) s.bind(v, Term::var(next_var++));
  return apply(s, c);
}

namespace {

void scan_first_occurrence(const Term& t, std::map<VarId, VarId>& num, VarId& next) {
  if (t.is_var()) {
    if (!num.count(t.var_id())) num[t.var_id()] = next++;
    return;
  }
  for (const auto& a : t.args()) scan_first_occurrence(a, num, next);
}

}  // namespace

Clause normalize_vars(const Clause& c) {
  std::map<VarId, VarId> num;
  VarId next = 0;
  for (const auto& l : c.lits) {
    scan_first_occurrence(l.lhs, num, next);
    scan_first_occurrence(l.rhs, num, next);
  }
  Substitution s;
  for (auto& [v, n] : num) s.bind(v, Term::var(n));
  return apply(s, c);
}

namespace {

std::string render_numbered(const Term& t, const std::map<VarId, VarId>& num) {
  std::map<VarId, std::string> names;
  std::set<VarId> vs = vars(t);
  for (VarId v : vs) {
    auto it = num.find(v);
    names[v] = "v" + std::to_string(it == num.end() ? v + 1000000 : it->second);
  }
  return to_string(t, names);
}

// One oriented literal as a key piece under a numbering extended on the fly.
std::string render_literal_piece(const Literal& l, int orient,
                                 std::map<VarId, VarId>& num, VarId& next) {
  const Term& a = orient == 0 ? l.lhs : l.rhs;
  const Term& b = orient == 0 ? l.rhs : l.lhs;
  scan_first_occurrence(a, num, next);
  scan_first_occurrence(b, num, next);
  return render_numbered(a, num) + (l.positive ? "=" : "#") + render_numbered(b, num);
}

struct KeySearch {
  const std::vector<Literal>& lits;
  const Substitution* theta;
  std::vector<std::string> best;
  bool have_best = false;
  size_t states = 0;

  void finish(std::vector<std::string> pieces, const std::map<VarId, VarId>& num) {
    if (theta) {
      std::vector<std::pair<VarId, VarId>> by_number(num.begin(), num.end());
      std::sort(by_number.begin(), by_number.end(),
                [](auto& x, auto& y) { return x.second < y.second; });
      for (auto& [orig, n] : by_number) {
        Term img = theta->find(orig) ? *theta->find(orig) : Term::var(orig);
        pieces.push_back("v" + std::to_string(n) + ">" + render_numbered(img, num));
      }
    }
    if (!have_best || pieces < best) {
      best = std::move(pieces);
      have_best = true;
    }
  }

  void step(std::vector<bool>& used, size_t remaining,
            std::vector<std::string>& pieces, const std::map<VarId, VarId>& num,
            VarId next) {
    if (++states > 20000)
      throw std::runtime_error("canonical_key: tie branching limit exceeded");
    if (remaining == 0) {
      finish(pieces, num);
      return;
    }
    // choose the lexicographically least next piece; branch over distinct ties
    std::string best_piece;
    bool have_piece = false;
    struct Choice {
      size_t idx;
      int orient;
      std::map<VarId, VarId> num;
      VarId next;
    };
    std::vector<Choice> ties;
    for (size_t i = 0; i < lits.size(); ++i) {
      if (used[i]) continue;
      for (int orient = 0; orient < 2; ++orient) {
        auto num2 = num;
        VarId next2 = next;
        std::string piece = render_literal_piece(lits[i], orient, num2, next2);
        if (!have_piece || piece < best_piece) {
          best_piece = piece;
          have_piece = true;
          ties.clear();
        }
        if (piece == best_piece) {
          bool dup = false;
          for (auto& t : ties)
            if (t.num == num2) { dup = true; break; }
          if (!dup) ties.push_back(Choice{i, orient, std::move(num2), next2});
        }
      }
    }
    pieces.push_back(best_piece);
    for (auto& t : ties) {
      used[t.idx] = true;
      step(used, remaining - 1, pieces, t.num, t.next);
      used[t.idx] = false;
    }
    pieces.pop_back();
  }
};

}  // namespace

std::string canonical_key(const Clause& c, const Substitution* theta) {
  if (c.lits.empty()) return theta ? "[]|" : "[]";
  KeySearch search{c.lits, theta};
  std::vector<bool> used(c.lits.size(), false);
  std::vector<std::string> pieces;
  std::map<VarId, VarId> num;
  search.step(used, c.lits.size(), pieces, num, 0);
  std::string out;
  for (size_t i = 0; i < search.best.size(); ++i) {
    if (i) out += "|";
    out += search.best[i];
  }
  return out;
}

bool variant(const Clause& a, const Clause& b) {
  if (a.lits.size() != b.lits.size()) return false;
  if (a.lits.size() == b.lits.size() && a == b) return true;
  return canonical_key(a) == canonical_key(b);
}

namespace {

bool extend_var_map(const Term& s, const Term& t, std::map<VarId, VarId>& fwd,
                    std::map<VarId, VarId>& bwd) {
  if (s.is_var() != t.is_var()) return false;
  if (s.is_var()) {
    auto f = fwd.find(s.var_id());
    auto g = bwd.find(t.var_id());
    if (f != fwd.end()) return f->second == t.var_id();
    if (g != bwd.end()) return false;
    fwd[s.var_id()] = t.var_id();
    bwd[t.var_id()] = s.var_id();
    return true;
  }
  if (s.fun() != t.fun()) return false;
  for (size_t i = 0; i < s.args().size(); ++i)
    if (!extend_var_map(s.args()[i], t.args()[i], fwd, bwd)) return false;
  return true;
}

void variant_search(const Clause& a, const Clause& b, std::vector<bool>& used,
                    size_t i, std::map<VarId, VarId> fwd, std::map<VarId, VarId> bwd,
                    std::vector<Substitution>& out) {
  if (i == a.lits.size()) {
    Substitution s;
    for (auto& [v, w] : fwd) s.bind(v, Term::var(w));
    for (auto& prev : out)
      if (prev == s) return;
    out.push_back(std::move(s));
    return;
  }
  for (size_t j = 0; j < b.lits.size(); ++j) {
    if (used[j]) continue;
    if (a.lits[i].positive != b.lits[j].positive) continue;
    for (int orient = 0; orient < 2; ++orient) {
      const Term& t1 = orient == 0 ? b.lits[j].lhs : b.lits[j].rhs;
      const Term& t2 = orient == 0 ? b.lits[j].rhs : b.lits[j].lhs;
      auto fwd2 = fwd;
      auto bwd2 = bwd;
      if (extend_var_map(a.lits[i].lhs, t1, fwd2, bwd2) &&
          extend_var_map(a.lits[i].rhs, t2, fwd2, bwd2)) {
        used[j] = true;
        variant_search(a, b, used, i + 1, std::move(fwd2), std::move(bwd2), out);
        used[j] = false;
      }
    }
  }
}

}  // namespace

std::vector<Substitution> variant_maps(const Clause& a, const Clause& b) {
  std::vector<Substitution> out;
  if (a.lits.size() != b.lits.size()) return out;
  std::vector<bool> used(b.lits.size(), false);
  variant_search(a, b, used, 0, {}, {}, out);
  return out;
}

std::string to_string(const Literal& l) {
  return to_string(l.lhs) + (l.positive ? " = " : " != ") + to_string(l.rhs);
}

std::string to_string(const Literal& l, const std::map<VarId, std::string>& names) {
  return to_string(l.lhs, names) + (l.positive ? " = " : " != ") +
         to_string(l.rhs, names);
}

std::string to_string(const Clause& c) {
  if (c.lits.empty()) return "[]";
  std::string out;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (i) out += " | ";
    out += to_string(c.lits[i]);
  }
  return out;
}

std::string to_string(const Clause& c, const std::map<VarId, std::string>& names) {
  if (c.lits.empty()) return "[]";
  std::string out;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (i) out += " | ";
    out += to_string(c.lits[i], names);
  }
  return out;
}

}  // namespace dersat
