#pragma once

#include <string>
#include <vector>

#include "dersat/clause.hpp"
#include "dersat/inference.hpp"
#include "dersat/ordering.hpp"
#include "dersat/simplify.hpp"

namespace dersat {

struct Limits {
  int max_clauses = 20000;
  double timeout_s = 60.0;
};

// One journal entry per clause the prover ever held. Dead entries stay so a
// proof can be reconstructed and every deletion audited.
struct ClauseRecord {
  int id = 0;
  Clause clause;  // stored renamed apart from every other record
  RuleTag rule = RuleTag::Input;
  std::vector<int> premises;  // journal ids consumed by the creating step
  bool alive = true;
  RuleTag death = RuleTag::Input;  // meaningful only when !alive
  std::vector<int> killers;        // ids justifying the deletion
  std::string note;
};

enum class ProverStatus { Unsatisfiable, Saturated, ResourceOut };

struct ProverResult {
  ProverStatus status = ProverStatus::ResourceOut;
  std::vector<ClauseRecord> records;
  int empty_clause = -1;  // journal id of the empty clause when Unsatisfiable
  std::vector<Clause> final_clauses;  // surviving clauses when Saturated
  int generated = 0;                  // inference conclusions admitted
  int iterations = 0;                 // given-clause loop rounds
  int age_picks = 0;
  int weight_picks = 0;

  // true if any journal entry is a renaming of c
  bool has_clause(const Clause& c) const;
  // journal id of the first such entry, or -1
  int find_clause(const Clause& c) const;
};

// ids of the records forming the refutation, topologically sorted, root last
std::vector<int> proof_ids(const ProverResult& r);
// one line per proof step: id, rule tag, premise ids, conclusion
std::string proof_text(const ProverResult& r);

struct SaturateOptions {
  Limits limits;
  // Clauses deleted the moment a renaming of one appears, journalled with
  // rule tag "oracle". Experiment hook; never used by ordinary proving.
  std::vector<Clause> oracle_delete;
  // skip the regime admissibility check (deliberate experiments only)
  bool force = false;
};

ProverResult saturate(const std::vector<Clause>& input,
                      const OrderingConfig& cfg, const RegimeConfig& regime,
                      const SaturateOptions& opts = {});

// Scripted head-to-head run of the bridge-equation scenario: derive the
// bridge unit, certify it entailed-by-smaller-clauses, then compare what a
// prover that deletes on that basis concludes against one using the
// closure criterion. Each step reports pass/fail with a human-readable
// detail line.
struct ReplayStep {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReplayReport {
  std::vector<ReplayStep> steps;
  bool all_pass() const;
  std::string text() const;  // one line per step
};

ReplayReport replay_incompleteness(const OrderingConfig& cfg);

// the ordering the scenario is stated for (weighted KBO over f,g,b,b',c,c',d)
OrderingConfig bridge_scenario_ordering();
// the five input clauses of the scenario
std::vector<Clause> bridge_scenario_clauses();

}  // namespace dersat
