#include "dersat/term.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dersat {

namespace {
std::mutex& sig_mutex() {
  static std::mutex m;
  return m;
}

size_t hash_mix(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}
}  // namespace

Signature& Signature::instance() {
  static Signature s;
  return s;
}

FunId Signature::intern(const std::string& name, int arity) {
  std::lock_guard<std::mutex> lock(sig_mutex());
  auto key = std::make_pair(name, arity);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  FunId id = static_cast<FunId>(syms_.size());
  syms_.push_back(key);
  index_.emplace(key, id);
  return id;
}

std::optional<FunId> Signature::lookup(const std::string& name, int arity) const {
  std::lock_guard<std::mutex> lock(sig_mutex());
  auto it = index_.find(std::make_pair(name, arity));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& Signature::name(FunId f) const {
  std::lock_guard<std::mutex> lock(sig_mutex());
  return syms_.at(static_cast<size_t>(f)).first;
}

int Signature::arity(FunId f) const {
  std::lock_guard<std::mutex> lock(sig_mutex());
  return syms_.at(static_cast<size_t>(f)).second;
}

size_t Signature::size() const {
  std::lock_guard<std::mutex> lock(sig_mutex());
  return syms_.size();
}

Term Term::var(VarId v) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->id = v;
  n->hash = hash_mix(0x5bd1e995u, static_cast<size_t>(static_cast<uint32_t>(v)));
  n->size = 1;
  n->fun_count = 0;
  n->ground = false;
  Term t;
  t.n_ = std::move(n);
  return t;
}

Term Term::app(FunId f, std::vector<Term> args) {
  int want = Signature::instance().arity(f);
  if (static_cast<int>(args.size()) != want)
    throw std::invalid_argument("arity mismatch for symbol " +
                                Signature::instance().name(f));
  auto n = std::make_shared<Node>();
  n->is_var = false;
  n->id = f;
  n->size = 1;
  n->fun_count = 1;
  n->ground = true;
  size_t h = hash_mix(0x9747b28cu, static_cast<size_t>(static_cast<uint32_t>(f)));
  for (const Term& a : args) {
    n->size += a.size();
    n->fun_count += a.fun_count();
    n->ground = n->ground && a.ground();
    h = hash_mix(h, a.hash());
  }
  n->hash = h;
  n->args = std::move(args);
  Term t;
  t.n_ = std::move(n);
  return t;
}

bool Term::operator==(const Term& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (n_->hash != o.n_->hash || n_->is_var != o.n_->is_var || n_->id != o.n_->id ||
      n_->size != o.n_->size)
    return false;
  for (size_t i = 0; i < n_->args.size(); ++i)
    if (!(n_->args[i] == o.n_->args[i])) return false;
  return true;
}

int syntactic_compare(const Term& a, const Term& b) {
  if (a == b) return 0;
  if (a.is_var() != b.is_var()) return a.is_var() ? -1 : 1;
  if (a.is_var()) return a.var_id() < b.var_id() ? -1 : 1;
  if (a.fun() != b.fun()) return a.fun() < b.fun() ? -1 : 1;
  for (size_t i = 0; i < a.args().size(); ++i) {
    int c = syntactic_compare(a.args()[i], b.args()[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool position_valid(const Term& t, const Position& p) {
  Term cur = t;
  for (int i : p) {
    if (cur.is_var()) return false;
    if (i < 1 || static_cast<size_t>(i) > cur.args().size()) return false;
    cur = cur.args()[static_cast<size_t>(i) - 1];
  }
  return true;
}

Term subterm_at(const Term& t, const Position& p) {
  Term cur = t;
  for (int i : p) {
    if (cur.is_var() || i < 1 || static_cast<size_t>(i) > cur.args().size())
      throw std::out_of_range("invalid position");
    cur = cur.args()[static_cast<size_t>(i) - 1];
  }
  return cur;
}

Term replace_at(const Term& t, const Position& p, const Term& repl) {
  if (p.empty()) return repl;
  if (t.is_var() || p[0] < 1 || static_cast<size_t>(p[0]) > t.args().size())
    throw std::out_of_range("invalid position");
  std::vector<Term> args = t.args();
  Position rest(p.begin() + 1, p.end());
  args[static_cast<size_t>(p[0]) - 1] =
      replace_at(args[static_cast<size_t>(p[0]) - 1], rest, repl);
  return Term::app(t.fun(), std::move(args));
}

bool contains_subterm(const Term& t, const Term& sub) {
  if (t == sub) return true;
  if (t.is_var()) return false;
  if (t.size() <= sub.size()) return false;
  for (const Term& a : t.args())
    if (contains_subterm(a, sub)) return true;
  return false;
}

bool proper_superterm(const Term& t, const Term& sub) {
  if (t.is_var() || t.size() <= sub.size()) return false;
  for (const Term& a : t.args())
    if (contains_subterm(a, sub)) return true;
  return false;
}

namespace {
void occurrences_rec(const Term& t, const Term& sub, Position& cur,
                     std::vector<Position>& out) {
  if (t == sub) out.push_back(cur);
  if (t.is_var() || t.size() <= sub.size()) return;
  for (size_t i = 0; i < t.args().size(); ++i) {
    cur.push_back(static_cast<int>(i + 1));
    occurrences_rec(t.args()[i], sub, cur, out);
    cur.pop_back();
  }
}

void subterms_rec(const Term& t, TermSet& out) {
  if (!out.insert(t).second) return;
  if (t.is_var()) return;
  for (const Term& a : t.args()) subterms_rec(a, out);
}
}  // namespace

std::vector<Position> term_occurrences(const Term& t, const Term& sub) {
  std::vector<Position> out;
  Position cur;
  occurrences_rec(t, sub, cur, out);
  return out;
}

TermSet subterms(const Term& t) {
  TermSet out;
  subterms_rec(t, out);
  return out;
}

void collect_vars(const Term& t, std::set<VarId>& out) {
  if (t.is_var()) {
    out.insert(t.var_id());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

std::set<VarId> vars(const Term& t) {
  std::set<VarId> out;
  collect_vars(t, out);
  return out;
}

namespace {
void print_rec(const Term& t, const std::map<VarId, std::string>* names,
               std::ostringstream& os) {
  if (t.is_var()) {
    if (names) {
      auto it = names->find(t.var_id());
      if (it != names->end()) {
        os << it->second;
        return;
      }
    }
    os << "X" << t.var_id();
    return;
  }
  os << Signature::instance().name(t.fun());
  if (!t.args().empty()) {
    os << "(";
    for (size_t i = 0; i < t.args().size(); ++i) {
      if (i) os << ",";
      print_rec(t.args()[i], names, os);
    }
    os << ")";
  }
}
}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print_rec(t, nullptr, os);
  return os.str();
}

std::string to_string(const Term& t, const std::map<VarId, std::string>& names) {
  std::ostringstream os;
  print_rec(t, &names, os);
  return os.str();
}

Substitution Substitution::single(VarId v, Term t) {
  Substitution s;
  s.bind(v, std::move(t));
  return s;
}

void Substitution::bind(VarId v, Term t) { m_[v] = std::move(t); }

const Term* Substitution::find(VarId v) const {
  auto it = m_.find(v);
  return it == m_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
  if (m_.empty() || t.ground()) return t;
  if (t.is_var()) {
    const Term* b = find(t.var_id());
    return b ? *b : t;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  bool changed = false;
  for (const Term& a : t.args()) {
    Term r = apply(a);
    changed = changed || !(r == a);
    args.push_back(std::move(r));
  }
  if (!changed) return t;
  return Term::app(t.fun(), std::move(args));
}

Substitution Substitution::compose(const Substitution& after, const Substitution& before) {
  Substitution out;
  for (const auto& [v, t] : before.m_) out.m_[v] = after.apply(t);
  for (const auto& [v, t] : after.m_)
    if (!before.find(v)) out.m_[v] = t;
  return out;
}

Substitution Substitution::restricted_to(const std::set<VarId>& dom) const {
  Substitution out;
  for (const auto& [v, t] : m_)
    if (dom.count(v)) out.m_[v] = t;
  return out;
}

bool Substitution::operator==(const Substitution& o) const {
  if (m_.size() != o.m_.size()) return false;
  auto it2 = o.m_.begin();
  for (auto it1 = m_.begin(); it1 != m_.end(); ++it1, ++it2) {
    if (it1->first != it2->first || !(it1->second == it2->second)) return false;
  }
  return true;
}

std::string to_string(const Substitution& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [v, t] : s.map()) {
    if (!first) os << ", ";
    first = false;
    os << "X" << v << " -> " << to_string(t);
  }
  os << "}";
  return os.str();
}

}  // namespace dersat
