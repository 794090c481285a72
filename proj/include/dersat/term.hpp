#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dersat {

using VarId = int32_t;
using FunId = int32_t;

// Process-wide symbol table. A symbol is (name, arity); the same name with a
// different arity is a different FunId, so arity conflicts are detected by
// the parser, not here.
class Signature {
 public:
  static Signature& instance();

  FunId intern(const std::string& name, int arity);
  std::optional<FunId> lookup(const std::string& name, int arity) const;
  const std::string& name(FunId f) const;
  int arity(FunId f) const;
  size_t size() const;

 private:
  std::vector<std::pair<std::string, int>> syms_;
  std::map<std::pair<std::string, int>, FunId> index_;
};

// Immutable first-order term. Copying a Term copies a pointer.
class Term {
 public:
  Term() = default;  // empty handle; only comparison/assignment are valid

  static Term var(VarId v);
  static Term app(FunId f, std::vector<Term> args = {});

  bool valid() const { return n_ != nullptr; }
  bool is_var() const { return n_->is_var; }
  VarId var_id() const { return n_->id; }
  FunId fun() const { return n_->id; }
  const std::vector<Term>& args() const { return n_->args; }

  size_t hash() const { return n_->hash; }
  // total node count / function-symbol node count
  uint32_t size() const { return n_->size; }
  uint32_t fun_count() const { return n_->fun_count; }
  bool ground() const { return n_->ground; }

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

 private:
  struct Node {
    bool is_var;
    int32_t id;  // VarId or FunId
    std::vector<Term> args;
    size_t hash;
    uint32_t size;
    uint32_t fun_count;
    bool ground;
  };
  std::shared_ptr<const Node> n_;
};

// Deterministic structural order used for canonical sorting of sets and
// printouts. It is unrelated to the reduction ordering.
int syntactic_compare(const Term& a, const Term& b);

struct TermLess {
  bool operator()(const Term& a, const Term& b) const {
    return syntactic_compare(a, b) < 0;
  }
};

using TermSet = std::set<Term, TermLess>;

// Positions are 1-based argument paths; the empty path is the top.
using Position = std::vector<int>;

bool position_valid(const Term& t, const Position& p);
Term subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& repl);

bool contains_subterm(const Term& t, const Term& sub);
bool proper_superterm(const Term& t, const Term& sub);
// all subterm occurrences of sub in t, outermost-first within a left-to-right scan
std::vector<Position> term_occurrences(const Term& t, const Term& sub);
// the set of distinct subterms of t, including t itself
TermSet subterms(const Term& t);

void collect_vars(const Term& t, std::set<VarId>& out);
std::set<VarId> vars(const Term& t);

std::string to_string(const Term& t);
// variable names for printing; defaults to X<k> when a var is absent
std::string to_string(const Term& t, const std::map<VarId, std::string>& names);

class Substitution {
 public:
  Substitution() = default;

  static Substitution single(VarId v, Term t);

  bool empty() const { return m_.empty(); }
  size_t size() const { return m_.size(); }
  const std::map<VarId, Term>& map() const { return m_; }

  void bind(VarId v, Term t);  // overwrites
  const Term* find(VarId v) const;

  // single-pass homomorphic application
  Term apply(const Term& t) const;

  // (after ∘ before): apply 'before' first. Bindings of 'after' whose
  // variables are untouched by 'before' carry over.
  static Substitution compose(const Substitution& after, const Substitution& before);

  Substitution restricted_to(const std::set<VarId>& dom) const;

  bool operator==(const Substitution& o) const;

 private:
  std::map<VarId, Term> m_;
};

std::string to_string(const Substitution& s);

}  // namespace dersat
