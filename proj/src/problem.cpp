#include "dersat/problem.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

namespace dersat {

std::string to_string(const Diagnostic& d) {
  std::ostringstream os;
  os << d.line << ":" << d.col << ": " << d.message;
  return os.str();
}

namespace {

struct Tok {
  enum Kind {
    Ident,
    Num,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Dot,
    Pipe,
    Eq,
    Neq,
    Gt,
    Arrow,
    End,
    Bad
  };
  Kind kind = End;
  std::string text;
  int line = 1;
  int col = 1;
};

std::vector<Tok> lex(const std::string& text, std::vector<Diagnostic>& diags) {
  std::vector<Tok> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Tok::Kind k, std::string t, int l, int c) {
    out.push_back({k, std::move(t), l, c});
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (ch == '%') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    int l = line, c = col;
    if (std::isalpha((unsigned char)ch)) {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum((unsigned char)text[j]) || text[j] == '_' ||
              text[j] == '\''))
        ++j;
      push(Tok::Ident, text.substr(i, j - i), l, c);
      col += (int)(j - i);
      i = j;
      continue;
    }
    if (std::isdigit((unsigned char)ch)) {
      size_t j = i;
      while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
      push(Tok::Num, text.substr(i, j - i), l, c);
      col += (int)(j - i);
      i = j;
      continue;
    }
    auto two = [&](char a, char b) {
      return ch == a && i + 1 < text.size() && text[i + 1] == b;
    };
    if (two('!', '=')) {
      push(Tok::Neq, "!=", l, c);
      i += 2;
      col += 2;
      continue;
    }
    if (two('-', '>')) {
      push(Tok::Arrow, "->", l, c);
      i += 2;
      col += 2;
      continue;
    }
    Tok::Kind k = Tok::Bad;
    switch (ch) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBrack; break;
      case ']': k = Tok::RBrack; break;
      case ',': k = Tok::Comma; break;
      case '.': k = Tok::Dot; break;
      case '|': k = Tok::Pipe; break;
      case '=': k = Tok::Eq; break;
      case '>': k = Tok::Gt; break;
      default: k = Tok::Bad; break;
    }
    if (k == Tok::Bad)
      diags.push_back({l, c, std::string("unexpected character '") + ch + "'"});
    else
      push(k, std::string(1, ch), l, c);
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool upper_initial(const std::string& s) {
  return !s.empty() && std::isupper((unsigned char)s[0]);
}

struct Parser {
  std::vector<Tok> toks;
  size_t pos = 0;
  std::vector<Diagnostic>& diags;
  ProblemFile& f;

  // symbol table: one arity per name, first use wins
  std::map<std::string, int> arity;
  std::map<std::string, std::pair<int, int>> first_use;  // line, col
  std::map<std::string, FunId> funs;

  // directives that mention symbols by name before their arity is known
  std::vector<std::tuple<std::string, uint64_t, int, int>> pending_weights;
  std::vector<std::string> pending_prec;

  // names seen, to reject duplicates
  std::set<std::string> clause_names;
  std::set<std::string> closure_names;

  Parser(std::vector<Tok> t, std::vector<Diagnostic>& d, ProblemFile& file)
      : toks(std::move(t)), diags(d), f(file) {}

  const Tok& peek() const { return toks[pos]; }
  Tok take() { return toks[pos == toks.size() - 1 ? pos : pos++]; }

  void error_here(const std::string& msg) {
    diags.push_back({peek().line, peek().col, msg});
  }

  // recovery point: resume after the next dot
  void skip_to_dot() {
    while (peek().kind != Tok::Dot && peek().kind != Tok::End) ++pos;
    if (peek().kind == Tok::Dot) ++pos;
  }

  bool expect(Tok::Kind k, const char* what) {
    if (peek().kind != k) {
      error_here(std::string("expected ") + what);
      return false;
    }
    ++pos;
    return true;
  }

  FunId resolve_fun(const std::string& name, int ar, int line, int col,
                    bool& bad) {
    auto it = arity.find(name);
    if (it != arity.end() && it->second != ar) {
      std::ostringstream os;
      os << "arity conflict for '" << name << "': used with " << it->second
         << " and " << ar;
      diags.push_back({line, col, os.str()});
      bad = true;
      return funs[name];
    }
    if (it == arity.end()) {
      arity[name] = ar;
      first_use[name] = {line, col};
      funs[name] = Signature::instance().intern(name, ar);
    }
    return funs[name];
  }

  // prefix term; uppercase-initial identifiers are variables scoped to vmap
  std::optional<Term> parse_term(std::map<std::string, VarId>& vmap,
                                 bool allow_vars, bool& bad) {
    if (peek().kind != Tok::Ident) {
      error_here("expected a term");
      bad = true;
      return std::nullopt;
    }
    Tok head = take();
    if (upper_initial(head.text)) {
      if (!allow_vars) {
        diags.push_back({head.line, head.col,
                         "variable '" + head.text + "' not allowed here"});
        bad = true;
        return std::nullopt;
      }
      auto it = vmap.find(head.text);
      if (it == vmap.end())
        it = vmap.emplace(head.text, (VarId)vmap.size()).first;
      return Term::var(it->second);
    }
    std::vector<Term> args;
    if (peek().kind == Tok::LParen) {
      ++pos;
      for (;;) {
        auto a = parse_term(vmap, allow_vars, bad);
        if (!a) return std::nullopt;
        args.push_back(std::move(*a));
        if (peek().kind == Tok::Comma) {
          ++pos;
          continue;
        }
        break;
      }
      if (!expect(Tok::RParen, "')'")) {
        bad = true;
        return std::nullopt;
      }
    }
    FunId fn =
        resolve_fun(head.text, (int)args.size(), head.line, head.col, bad);
    if (bad) return std::nullopt;
    return Term::app(fn, std::move(args));
  }

  std::optional<Literal> parse_literal(std::map<std::string, VarId>& vmap,
                                       bool& bad) {
    auto lhs = parse_term(vmap, true, bad);
    if (!lhs) return std::nullopt;
    bool positive;
    if (peek().kind == Tok::Eq)
      positive = true;
    else if (peek().kind == Tok::Neq)
      positive = false;
    else {
      error_here("expected '=' or '!='");
      bad = true;
      return std::nullopt;
    }
    ++pos;
    auto rhs = parse_term(vmap, true, bad);
    if (!rhs) return std::nullopt;
    return positive ? eq(*lhs, *rhs) : neq(*lhs, *rhs);
  }

  void parse_order() {
    if (peek().kind == Tok::Ident && peek().text == "kbo")
      f.order = OrderKind::Kbo;
    else if (peek().kind == Tok::Ident && peek().text == "lpo")
      f.order = OrderKind::Lpo;
    else {
      error_here("expected 'kbo' or 'lpo'");
      skip_to_dot();
      return;
    }
    ++pos;
    if (!expect(Tok::Dot, "'.'")) skip_to_dot();
  }

  void parse_weight() {
    if (peek().kind != Tok::Ident || upper_initial(peek().text)) {
      error_here("expected a function symbol");
      skip_to_dot();
      return;
    }
    Tok sym = take();
    if (peek().kind != Tok::Num) {
      error_here("expected a weight");
      skip_to_dot();
      return;
    }
    uint64_t w = std::stoull(take().text);
    if (!expect(Tok::Dot, "'.'")) {
      skip_to_dot();
      return;
    }
    pending_weights.emplace_back(sym.text, w, sym.line, sym.col);
  }

  void parse_varweight() {
    if (peek().kind != Tok::Num) {
      error_here("expected a weight");
      skip_to_dot();
      return;
    }
    f.var_weight = std::stoull(take().text);
    if (!expect(Tok::Dot, "'.'")) skip_to_dot();
  }

  void parse_prec() {
    std::vector<std::string> chain;
    for (;;) {
      if (peek().kind != Tok::Ident || upper_initial(peek().text)) {
        error_here("expected a function symbol");
        skip_to_dot();
        return;
      }
      chain.push_back(take().text);
      if (peek().kind == Tok::Gt) {
        ++pos;
        continue;
      }
      break;
    }
    if (!expect(Tok::Dot, "'.'")) {
      skip_to_dot();
      return;
    }
    for (std::string& s : chain) pending_prec.push_back(std::move(s));
  }

  void parse_variant() {
    if (peek().kind == Tok::Ident && peek().text == "horn")
      f.variant = ClosureVariant::Horn;
    else if (peek().kind == Tok::Ident && peek().text == "nonhorn")
      f.variant = ClosureVariant::NonHorn;
    else {
      error_here("expected 'horn' or 'nonhorn'");
      skip_to_dot();
      return;
    }
    ++pos;
    if (!expect(Tok::Dot, "'.'")) skip_to_dot();
  }

  void parse_rule() {
    bool bad = false;
    std::map<std::string, VarId> vmap;
    int line = peek().line, col = peek().col;
    auto lhs = parse_term(vmap, false, bad);
    if (!lhs || !expect(Tok::Arrow, "'->'")) {
      skip_to_dot();
      return;
    }
    auto rhs = parse_term(vmap, false, bad);
    if (!rhs || bad) {
      skip_to_dot();
      return;
    }
    if (!expect(Tok::Dot, "'.'")) {
      skip_to_dot();
      return;
    }
    if (!lhs->ground() || !rhs->ground()) {
      diags.push_back({line, col, "rewrite rules must be ground"});
      return;
    }
    f.rules.push_back({*lhs, *rhs});
  }

  void parse_cnf() {
    if (!expect(Tok::LParen, "'('")) {
      skip_to_dot();
      return;
    }
    if (peek().kind != Tok::Ident) {
      error_here("expected a clause name");
      skip_to_dot();
      return;
    }
    Tok name = take();
    if (!expect(Tok::Comma, "','")) {
      skip_to_dot();
      return;
    }
    if (peek().kind != Tok::Ident) {
      error_here("expected a role");
      skip_to_dot();
      return;
    }
    Tok role = take();
    if (!expect(Tok::Comma, "','")) {
      skip_to_dot();
      return;
    }
    bool bad = false;
    std::map<std::string, VarId> vmap;
    std::vector<Literal> lits;
    for (;;) {
      auto lit = parse_literal(vmap, bad);
      if (!lit) {
        skip_to_dot();
        return;
      }
      lits.push_back(std::move(*lit));
      if (peek().kind == Tok::Pipe) {
        ++pos;
        continue;
      }
      break;
    }
    if (!expect(Tok::RParen, "')'") || !expect(Tok::Dot, "'.'")) {
      skip_to_dot();
      return;
    }
    if (bad) return;
    if (!clause_names.insert(name.text).second) {
      diags.push_back(
          {name.line, name.col, "duplicate clause name '" + name.text + "'"});
      return;
    }
    f.clauses.push_back({name.text, role.text, clause(std::move(lits))});
  }

  void parse_closure() {
    if (!expect(Tok::LParen, "'('")) {
      skip_to_dot();
      return;
    }
    if (peek().kind != Tok::Ident) {
      error_here("expected a closure name");
      skip_to_dot();
      return;
    }
    Tok name = take();
    if (!expect(Tok::Comma, "','")) {
      skip_to_dot();
      return;
    }
    bool bad = false;
    std::map<std::string, VarId> vmap;
    std::vector<Literal> lits;
    for (;;) {
      auto lit = parse_literal(vmap, bad);
      if (!lit) {
        skip_to_dot();
        return;
      }
      lits.push_back(std::move(*lit));
      if (peek().kind == Tok::Pipe) {
        ++pos;
        continue;
      }
      break;
    }
    if (!expect(Tok::Comma, "','") || !expect(Tok::LBrack, "'['")) {
      skip_to_dot();
      return;
    }
    Substitution theta;
    int subline = peek().line, subcol = peek().col;
    if (peek().kind != Tok::RBrack) {
      for (;;) {
        if (peek().kind != Tok::Ident || !upper_initial(peek().text)) {
          error_here("expected a variable");
          skip_to_dot();
          return;
        }
        Tok var = take();
        auto it = vmap.find(var.text);
        if (it == vmap.end()) {
          diags.push_back({var.line, var.col,
                           "variable '" + var.text +
                               "' does not occur in the closure clause"});
          skip_to_dot();
          return;
        }
        if (!expect(Tok::Arrow, "'->'")) {
          skip_to_dot();
          return;
        }
        auto img = parse_term(vmap, false, bad);
        if (!img || bad) {
          skip_to_dot();
          return;
        }
        theta.bind(it->second, *img);
        if (peek().kind == Tok::Comma) {
          ++pos;
          continue;
        }
        break;
      }
    }
    if (!expect(Tok::RBrack, "']'") || !expect(Tok::RParen, "')'") ||
        !expect(Tok::Dot, "'.'")) {
      skip_to_dot();
      return;
    }
    Clause c = clause(std::move(lits));
    for (VarId v : vars(c))
      if (!theta.find(v)) {
        diags.push_back(
            {subline, subcol, "closure substitution does not ground the clause"});
        return;
      }
    if (!closure_names.insert(name.text).second) {
      diags.push_back(
          {name.line, name.col, "duplicate closure name '" + name.text + "'"});
      return;
    }
    f.closures.push_back({name.text, GroundClosure(c, theta)});
  }

  void run() {
    while (peek().kind != Tok::End) {
      if (peek().kind != Tok::Ident) {
        error_here("expected a directive");
        skip_to_dot();
        continue;
      }
      std::string d = take().text;
      if (d == "order")
        parse_order();
      else if (d == "weight")
        parse_weight();
      else if (d == "varweight")
        parse_varweight();
      else if (d == "prec")
        parse_prec();
      else if (d == "variant")
        parse_variant();
      else if (d == "rule")
        parse_rule();
      else if (d == "cnf")
        parse_cnf();
      else if (d == "closure")
        parse_closure();
      else {
        diags.push_back({toks[pos - 1].line, toks[pos - 1].col,
                         "unknown directive '" + d + "'"});
        skip_to_dot();
      }
    }
  }

  void resolve() {
    // directives may name symbols never used in a term: treat as constants
    for (auto& [name, w, line, col] : pending_weights) {
      bool bad = false;
      FunId fn = resolve_fun(name, arity.count(name) ? arity[name] : 0, line,
                             col, bad);
      if (!bad) f.weights[fn] = w;
    }
    for (const std::string& name : pending_prec) {
      bool bad = false;
      FunId fn = resolve_fun(name, arity.count(name) ? arity[name] : 0, 1, 1,
                             bad);
      if (bad) continue;
      if (std::find(f.precedence.begin(), f.precedence.end(), fn) ==
          f.precedence.end())
        f.precedence.push_back(fn);
    }
    std::vector<std::pair<std::string, FunId>> named(funs.begin(), funs.end());
    std::sort(named.begin(), named.end());
    for (auto& [name, fn] : named) f.symbols.push_back(fn);

    // a kbo run needs a weight for every symbol that can appear in a term
    if (f.order.value_or(OrderKind::Kbo) == OrderKind::Kbo) {
      for (auto& [name, fn] : named)
        if (!f.weights.count(fn)) {
          auto [line, col] = first_use[name];
          diags.push_back(
              {line, col, "no kbo weight declared for '" + name + "'"});
        }
    }
  }
};

}  // namespace

ParseResult parse_problem(const std::string& text) {
  ParseResult res;
  std::vector<Tok> toks = lex(text, res.diagnostics);
  Parser p(std::move(toks), res.diagnostics, res.file);
  p.run();
  p.resolve();
  return res;
}

OrderingConfig ProblemFile::ordering() const {
  OrderingConfig cfg;
  cfg.kind = order.value_or(OrderKind::Kbo);
  cfg.var_weight = var_weight.value_or(1);
  cfg.weights = weights;
  std::vector<FunId> chain = precedence;
  for (FunId fn : symbols)
    if (std::find(chain.begin(), chain.end(), fn) == chain.end())
      chain.push_back(fn);
  cfg.precedence = precedence_desc(chain);
  return cfg;
}

std::vector<Clause> ProblemFile::clause_list() const {
  std::vector<Clause> out;
  out.reserve(clauses.size());
  for (const NamedClause& nc : clauses) out.push_back(nc.clause);
  return out;
}

namespace {

// stable variable names for printing: first occurrence order
std::map<VarId, std::string> var_names(const Clause& c) {
  static const char* pool[] = {"X", "Y", "Z", "U", "V", "W"};
  std::map<VarId, std::string> names;
  size_t next = 0;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (t.is_var()) {
      if (!names.count(t.var_id())) {
        names[t.var_id()] =
            next < 6 ? pool[next] : "V" + std::to_string(next);
        ++next;
      }
      return;
    }
    for (const Term& a : t.args()) walk(a);
  };
  for (const Literal& l : c.lits) {
    walk(l.lhs);
    walk(l.rhs);
  }
  return names;
}

}  // namespace

std::string print_problem(const ProblemFile& f) {
  auto& sig = Signature::instance();
  std::ostringstream os;
  if (f.order)
    os << "order " << (*f.order == OrderKind::Kbo ? "kbo" : "lpo") << ".\n";
  if (f.var_weight) os << "varweight " << *f.var_weight << ".\n";
  {
    std::vector<std::pair<std::string, std::pair<FunId, uint64_t>>> ws;
    for (auto& [fn, w] : f.weights) ws.push_back({sig.name(fn), {fn, w}});
    std::sort(ws.begin(), ws.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    for (auto& [name, fw] : ws)
      os << "weight " << name << " " << fw.second << ".\n";
  }
  if (!f.precedence.empty()) {
    os << "prec";
    for (size_t i = 0; i < f.precedence.size(); ++i)
      os << (i ? " > " : " ") << sig.name(f.precedence[i]);
    os << ".\n";
  }
  if (f.variant)
    os << "variant "
       << (*f.variant == ClosureVariant::Horn ? "horn" : "nonhorn") << ".\n";
  for (const Rule& r : f.rules)
    os << "rule " << to_string(r.lhs) << " -> " << to_string(r.rhs) << ".\n";
  for (const NamedClause& nc : f.clauses) {
    std::map<VarId, std::string> names = var_names(nc.clause);
    os << "cnf(" << nc.name << ", " << nc.role << ", ";
    for (size_t i = 0; i < nc.clause.lits.size(); ++i) {
      if (i) os << " | ";
      os << to_string(nc.clause.lits[i], names);
    }
    os << ").\n";
  }
  for (const NamedClosure& nc : f.closures) {
    std::map<VarId, std::string> names = var_names(nc.closure.clause);
    os << "closure(" << nc.name << ", ";
    for (size_t i = 0; i < nc.closure.clause.lits.size(); ++i) {
      if (i) os << " | ";
      os << to_string(nc.closure.clause.lits[i], names);
    }
    os << ", [";
    bool first = true;
    for (auto& [v, t] : nc.closure.theta.map()) {
      if (!first) os << ", ";
      first = false;
      os << names.at(v) << " -> " << to_string(t);
    }
    os << "]).\n";
  }
  return os.str();
}

}  // namespace dersat
