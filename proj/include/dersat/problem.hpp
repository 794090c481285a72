#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dersat/clause.hpp"
#include "dersat/closure.hpp"
#include "dersat/ordering.hpp"
#include "dersat/rewrite.hpp"

namespace dersat {

struct Diagnostic {
  int line = 1;
  int col = 1;
  std::string message;
};

std::string to_string(const Diagnostic& d);

struct NamedClause {
  std::string name;
  std::string role;
  Clause clause;
};

struct NamedClosure {
  std::string name;
  GroundClosure closure;
};

// One parsed input file. Ordering directives, clauses, and the laboratory
// extensions (a comparison variant, a ground rewrite system, closures) share
// a single format so every golden test is one file.
struct ProblemFile {
  std::optional<OrderKind> order;
  std::optional<uint64_t> var_weight;
  std::map<FunId, uint64_t> weights;
  std::vector<FunId> precedence;  // greatest first, as written
  std::vector<NamedClause> clauses;

  std::optional<ClosureVariant> variant;
  std::vector<Rule> rules;
  std::vector<NamedClosure> closures;

  // every function symbol used or declared, sorted by name then arity
  std::vector<FunId> symbols;

  // Declared data completed to a full config: defaults kbo with variable
  // weight 1; undeclared symbols extend the precedence chain sorted by name.
  OrderingConfig ordering() const;
  std::vector<Clause> clause_list() const;
};

struct ParseResult {
  ProblemFile file;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

// Collects all diagnostics; a directive with an error is dropped and parsing
// resumes after its closing dot.
ParseResult parse_problem(const std::string& text);

// canonical rendering; parsing it back yields a structurally equal file
std::string print_problem(const ProblemFile& f);

}  // namespace dersat
