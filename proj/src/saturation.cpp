#include "dersat/saturation.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

#include "dersat/congruence.hpp"
#include "dersat/lab.hpp"
#include "dersat/unify.hpp"

namespace dersat {

namespace {

bool positive_unit(const Clause& c) {
  return c.size() == 1 && c.lits[0].positive;
}

struct Prover {
  const OrderingConfig& cfg;
  const RegimeConfig& regime;
  const SaturateOptions& opts;

  std::vector<ClauseRecord> recs;
  std::vector<int> active;
  std::vector<int> passive;
  VarId next_var = 0;
  int empty_id = -1;
  int generated = 0;
  int iterations = 0;
  int age_picks = 0;
  int weight_picks = 0;
  bool truncated = false;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  Prover(const OrderingConfig& cfg_, const RegimeConfig& regime_,
         const SaturateOptions& opts_)
      : cfg(cfg_), regime(regime_), opts(opts_) {}

  bool out_of_resources() const {
    if ((int)recs.size() >= opts.limits.max_clauses) return true;
    double dt = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return dt > opts.limits.timeout_s;
  }

  int make_record(const Clause& c, RuleTag rule, std::vector<int> prem,
                  std::string note) {
    int id = (int)recs.size();
    ClauseRecord r;
    r.id = id;
    r.clause = rename_apart(c, next_var);  // keeps all records var-disjoint
    r.rule = rule;
    r.premises = std::move(prem);
    r.note = std::move(note);
    recs.push_back(std::move(r));
    return id;
  }

  void kill(int id, RuleTag why, std::vector<int> killers,
            std::string note = "") {
    ClauseRecord& r = recs[id];
    r.alive = false;
    r.death = why;
    r.killers = std::move(killers);
    if (!note.empty()) r.note = note;
  }

  // active and passive hold exactly the alive record ids
  std::vector<int> retained() const {
    std::vector<int> out = active;
    out.insert(out.end(), passive.begin(), passive.end());
    return out;
  }

  void unqueue(int id) {
    active.erase(std::remove(active.begin(), active.end(), id), active.end());
    passive.erase(std::remove(passive.begin(), passive.end(), id),
                  passive.end());
  }

  // Forward pass over the record's clause: scripted deletions, tautology,
  // duplicate and subsumption deletion, then rewriting simplifications.
  // Each rewrite makes a new record so the journal keeps every shape.
  // Returns the surviving id, or -1 when the clause was deleted.
  int forward(int id) {
    for (;;) {
      const Clause c = recs[id].clause;  // copy: recs may grow below
      bool oracle = false;
      for (const Clause& oc : opts.oracle_delete)
        if (variant(c, oc)) {
          oracle = true;
          break;
        }
      if (oracle) {
        kill(id, RuleTag::Oracle, {}, "scripted deletion");
        return -1;
      }
      if (regime.tautology && is_tautology(c)) {
        kill(id, RuleTag::Tautology, {});
        return -1;
      }
      {
        int dup = -1;
        for (int j : retained())
          if (variant(recs[j].clause, c)) {
            dup = j;
            break;
          }
        if (dup >= 0) {
          kill(id, RuleTag::Subsumption, {dup}, "duplicate");
          return -1;
        }
      }
      if (regime.subsumption != SubsumeMode::Off) {
        int by = -1;
        for (int j : retained())
          if (subsumes(recs[j].clause, c, regime.subsumption)) {
            by = j;
            break;
          }
        if (by >= 0) {
          kill(id, RuleTag::Subsumption, {by});
          return -1;
        }
      }
      if (regime.demod != DemodMode::Off) {
        int id2 = -1;
        for (int j : retained()) {
          if (!positive_unit(recs[j].clause)) continue;
          auto out = demodulate(c, recs[j].clause, regime.demod, cfg);
          if (out.kind == SimpKind::Replaced) {
            id2 = make_record(out.replacement, RuleTag::Demodulation, {id, j},
                              "");
            kill(id, RuleTag::Demodulation, {j}, "rewritten");
            break;
          }
        }
        if (id2 >= 0) {
          id = id2;
          continue;
        }
      }
      if (regime.parallel_cond_rewrite) {
        auto out = parallel_cond_rewrite(c, cfg);
        if (out.kind == SimpKind::Replaced) {
          int id2 =
              make_record(out.replacement, RuleTag::CondRewrite, {id}, "");
          kill(id, RuleTag::CondRewrite, {}, "rewritten");
          id = id2;
          continue;
        }
      }
      if (regime.der != DerMode::Off) {
        auto out = der(c, regime.der);
        if (out.kind == SimpKind::Replaced) {
          int id2 = make_record(out.replacement, RuleTag::Der, {id}, "");
          kill(id, RuleTag::Der, {}, "rewritten");
          id = id2;
          continue;
        }
      }
      {
        // trivially false literals and duplicate literals never survive;
        // without this the chain stalls on clauses like C v s != s whose
        // resolved literal is not maximal
        auto out = condense(c);
        if (out.kind == SimpKind::Replaced) {
          int id2 = make_record(out.replacement, RuleTag::Condense, {id}, "");
          kill(id, RuleTag::Condense, {}, "rewritten");
          id = id2;
          continue;
        }
      }
      return id;
    }
  }

  // record, simplify, enqueue; reports the empty clause through empty_id
  int admit(const Clause& c, RuleTag rule, std::vector<int> prem,
            std::string note = "") {
    int id = make_record(c, rule, std::move(prem), std::move(note));
    id = forward(id);
    if (id < 0) return -1;
    if (recs[id].clause.empty()) {
      empty_id = id;
      return id;
    }
    passive.push_back(id);
    return id;
  }

  // the freshly activated clause simplifies the rest of the working sets
  void backward(int g) {
    const Clause gc = recs[g].clause;
    std::vector<int> targets;
    for (int j : active)
      if (j != g) targets.push_back(j);
    targets.insert(targets.end(), passive.begin(), passive.end());
    for (int t : targets) {
      if (empty_id >= 0) return;
      if (!recs[t].alive) continue;
      if (regime.subsumption != SubsumeMode::Off &&
          subsumes(gc, recs[t].clause, regime.subsumption)) {
        kill(t, RuleTag::Subsumption, {g});
        unqueue(t);
        continue;
      }
      if (regime.demod != DemodMode::Off && positive_unit(gc)) {
        auto out = demodulate(recs[t].clause, gc, regime.demod, cfg);
        if (out.kind == SimpKind::Replaced) {
          kill(t, RuleTag::Demodulation, {g}, "rewritten");
          unqueue(t);
          admit(out.replacement, RuleTag::Demodulation, {t, g});
        }
      }
    }
  }

  // one age pick for every four weight picks; ids grow with age, so the
  // smallest id is the oldest clause
  int pick_given() {
    size_t best = 0;
    if (iterations % 5 == 0) {
      ++age_picks;
      for (size_t i = 1; i < passive.size(); ++i)
        if (passive[i] < passive[best]) best = i;
    } else {
      ++weight_picks;
      auto key = [&](int id) {
        return std::make_pair(recs[id].clause.symbol_count(), id);
      };
      for (size_t i = 1; i < passive.size(); ++i)
        if (key(passive[i]) < key(passive[best])) best = i;
    }
    int g = passive[best];
    passive.erase(passive.begin() + (long)best);
    return g;
  }

  void emit(std::vector<Inference>&& infs, std::vector<int> prem) {
    for (Inference& inf : infs) {
      if (empty_id >= 0) return;
      if (out_of_resources()) {
        truncated = true;
        return;
      }
      ++generated;
      admit(inf.conclusion, inf.tag, prem);
    }
  }

  void generate(int g) {
    const Clause gc = recs[g].clause;
    emit(eq_resolution(cfg, gc), {g});
    if (empty_id >= 0 || truncated) return;
    if (regime.regime != Regime::HornClosure) {
      emit(eq_factoring(cfg, gc), {g});
      if (empty_id >= 0 || truncated) return;
    }
    const std::vector<int> acts = active;  // admissions only touch passive
    for (int a : acts) {
      if (empty_id >= 0 || truncated) return;
      if (!recs[a].alive) continue;
      if (a == g) {
        Clause copy = rename_apart(gc, next_var);
        emit(superposition(cfg, gc, copy), {g, g});
        if (empty_id >= 0 || truncated) return;
        emit(superposition(cfg, copy, gc), {g, g});
      } else {
        emit(superposition(cfg, gc, recs[a].clause), {g, a});
        if (empty_id >= 0 || truncated) return;
        emit(superposition(cfg, recs[a].clause, gc), {a, g});
      }
    }
  }

  ProverResult run(const std::vector<Clause>& input) {
    for (const Clause& c : input) {
      if (empty_id >= 0) break;
      admit(c, RuleTag::Input, {});
    }
    bool hit = false;
    while (empty_id < 0 && !passive.empty()) {
      if (out_of_resources()) {
        hit = true;
        break;
      }
      int g = pick_given();
      ++iterations;
      active.push_back(g);
      backward(g);
      if (empty_id >= 0) break;
      generate(g);
      if (truncated) break;
    }

    ProverResult res;
    res.records = std::move(recs);
    res.generated = generated;
    res.iterations = iterations;
    res.age_picks = age_picks;
    res.weight_picks = weight_picks;
    if (empty_id >= 0) {
      res.status = ProverStatus::Unsatisfiable;
      res.empty_clause = empty_id;
    } else if (hit || truncated) {
      res.status = ProverStatus::ResourceOut;
    } else {
      res.status = ProverStatus::Saturated;
      for (int j : active)
        if (res.records[j].alive) res.final_clauses.push_back(res.records[j].clause);
    }
    return res;
  }
};

}  // namespace

int ProverResult::find_clause(const Clause& c) const {
  for (const ClauseRecord& r : records)
    if (variant(r.clause, c)) return r.id;
  return -1;
}

bool ProverResult::has_clause(const Clause& c) const {
  return find_clause(c) >= 0;
}

std::vector<int> proof_ids(const ProverResult& r) {
  if (r.empty_clause < 0) return {};
  std::vector<int> order;
  std::set<int> seen;
  std::function<void(int)> walk = [&](int id) {
    if (!seen.insert(id).second) return;
    for (int p : r.records[(size_t)id].premises) walk(p);
    order.push_back(id);
  };
  walk(r.empty_clause);
  return order;
}

std::string proof_text(const ProverResult& r) {
  std::ostringstream os;
  for (int id : proof_ids(r)) {
    const ClauseRecord& rec = r.records[(size_t)id];
    os << rec.id << ". " << to_string(rec.rule);
    if (!rec.premises.empty()) {
      os << "(";
      for (size_t i = 0; i < rec.premises.size(); ++i) {
        if (i) os << ",";
        os << rec.premises[i];
      }
      os << ")";
    }
    os << ": " << (rec.clause.empty() ? "false" : to_string(rec.clause))
       << "\n";
  }
  return os.str();
}

ProverResult saturate(const std::vector<Clause>& input,
                      const OrderingConfig& cfg, const RegimeConfig& regime,
                      const SaturateOptions& opts) {
  if (!opts.force) regime.validate();  // throws on an over-strength combo
  Prover p(cfg, regime, opts);
  return p.run(input);
}

bool ReplayReport::all_pass() const {
  for (const ReplayStep& s : steps)
    if (!s.pass) return false;
  return true;
}

std::string ReplayReport::text() const {
  std::ostringstream os;
  for (const ReplayStep& s : steps)
    os << (s.pass ? "PASS" : "FAIL") << "  " << s.name << ": " << s.detail
       << "\n";
  return os.str();
}

namespace {

struct ScenarioSymbols {
  FunId f, g, b, bp, c, cp, d;
  Term tb, tbp, tc, tcp, td, x, y;

  ScenarioSymbols() {
    auto& sig = Signature::instance();
    f = sig.intern("f", 2);
    g = sig.intern("g", 1);
    b = sig.intern("b", 0);
    bp = sig.intern("b'", 0);
    c = sig.intern("c", 0);
    cp = sig.intern("c'", 0);
    d = sig.intern("d", 0);
    tb = Term::app(b);
    tbp = Term::app(bp);
    tc = Term::app(c);
    tcp = Term::app(cp);
    td = Term::app(d);
    x = Term::var(0);
    y = Term::var(1);
  }

  Term gt(Term a) const { return Term::app(g, {std::move(a)}); }
  Term ft(Term a, Term b2) const {
    return Term::app(f, {std::move(a), std::move(b2)});
  }
};

}  // namespace

OrderingConfig bridge_scenario_ordering() {
  ScenarioSymbols s;
  OrderingConfig cfg;
  cfg.kind = OrderKind::Kbo;
  cfg.weights = {{s.f, 4}, {s.g, 3}, {s.b, 4}, {s.bp, 2},
                 {s.c, 1}, {s.cp, 1}, {s.d, 1}};
  cfg.var_weight = 1;
  cfg.precedence = precedence_desc({s.f, s.g, s.b, s.bp, s.c, s.cp, s.d});
  return cfg;
}

std::vector<Clause> bridge_scenario_clauses() {
  ScenarioSymbols s;
  Clause c1 = clause({eq(s.ft(s.x, s.td), s.x)});
  Clause c2 = clause({neq(s.ft(s.x, s.y), s.tb), eq(s.gt(s.x), s.td)});
  Clause c3 = clause({eq(s.tbp, s.tcp), eq(s.tb, s.tc)});
  Clause c4 = clause({neq(s.gt(s.tbp), s.gt(s.tcp))});
  Clause c5 = clause({neq(s.gt(s.tc), s.td)});
  return {c1, c2, c3, c4, c5};
}

ReplayReport replay_incompleteness(const OrderingConfig& cfg) {
  ScenarioSymbols sy;
  ReplayReport rep;
  auto add = [&](std::string name, bool pass, std::string detail) {
    rep.steps.push_back({std::move(name), pass, std::move(detail)});
  };

  std::vector<Clause> cls = bridge_scenario_clauses();
  const Clause& c1 = cls[0];
  const Clause& c2 = cls[1];
  const Clause& c3 = cls[2];
  const Clause& c4 = cls[3];

  Clause c6 = clause({neq(sy.x, sy.tb), eq(sy.gt(sy.x), sy.td)});
  Clause c7 = clause({eq(sy.gt(sy.tb), sy.td)});
  Clause c8 = clause({eq(sy.tbp, sy.tcp)});

  // 1: the one mandated inference between the unit and the conditional clause
  {
    VarId nv = 100;
    Clause c2r = rename_apart(c2, nv);
    std::vector<Inference> sups = superposition(cfg, c1, c2r);
    bool ok = sups.size() == 1 && variant(sups[0].conclusion, c6);
    std::string det = "expected " + to_string(c6) + "; got";
    if (sups.empty()) det += " nothing";
    for (const Inference& i : sups) det += " " + to_string(i.conclusion);
    add("derive conditional bridge clause", ok, det);
  }

  // 2: destructive elimination of the variable condition
  {
    auto out = der(c6, DerMode::Full);
    bool ok = out.kind == SimpKind::Replaced && variant(out.replacement, c7);
    std::string det = "expected " + to_string(c7);
    if (out.kind == SimpKind::Replaced)
      det += "; got " + to_string(out.replacement);
    else
      det += "; no rewrite";
    add("eliminate condition destructively", ok, det);
  }

  // 3: the bridge unit follows from clauses smaller than itself
  {
    Substitution sc;
    sc.bind(0, sy.tc);
    Substitution scd;
    scd.bind(0, sy.tc);
    scd.bind(1, sy.td);
    std::vector<Clause> base = {c3, c4, apply(sc, c1), apply(scd, c2)};
    bool ent = ground_entails(base, c7);
    std::string det = ent ? "entailed by" : "NOT entailed by";
    bool smaller = true;
    for (const Clause& p : base) {
      det += " {" + to_string(p) + "}";
      if (clause_compare(cfg, p, c7) != Cmp::Less) {
        smaller = false;
        det += "(not smaller)";
      }
    }
    add("certify classical redundancy of the bridge", ent && smaller, det);
  }

  // 4: a prover trusting that certificate deletes the bridge and stops
  ProverResult clrun;
  {
    SaturateOptions so;
    so.oracle_delete = {c7};
    clrun = saturate(cls, cfg, RegimeConfig::classical(), so);
    int i6 = clrun.find_clause(c6);
    int i7 = clrun.find_clause(c7);
    bool ok = clrun.status == ProverStatus::Saturated &&
              clrun.empty_clause < 0 && i6 >= 0 && i7 >= 0 &&
              !clrun.records[(size_t)i7].alive &&
              clrun.records[(size_t)i7].death == RuleTag::Oracle;
    std::ostringstream det;
    det << "status "
        << (clrun.status == ProverStatus::Saturated
                ? "Saturated"
                : (clrun.status == ProverStatus::Unsatisfiable
                       ? "Unsatisfiable"
                       : "ResourceOut"))
        << ", " << clrun.records.size() << " records";
    add("classical run discards bridge and saturates", ok, det.str());
  }

  // 5: with the bridge gone, every remaining inference is redundant or done
  {
    int open = 0;
    std::string shapes;
    auto consider = [&](const Inference& inf) {
      const Clause& k = inf.conclusion;
      if (variant(k, c6)) return;  // already performed and processed
      if (is_tautology(k)) return;
      if (k.ground() && classically_redundant(cfg, k, cls)) return;
      ++open;
      shapes += " " + to_string(k);
    };
    VarId nv = 200;
    std::vector<Clause> ren;
    for (const Clause& k : cls) ren.push_back(rename_apart(k, nv));
    for (size_t i = 0; i < cls.size(); ++i) {
      for (const Inference& inf : eq_resolution(cfg, cls[i])) consider(inf);
      for (const Inference& inf : eq_factoring(cfg, cls[i])) consider(inf);
      for (size_t j = 0; j < cls.size(); ++j)
        for (const Inference& inf : superposition(cfg, cls[i], ren[j]))
          consider(inf);
    }
    add("no non-redundant inference remains", open == 0,
        open == 0 ? "all conclusions redundant or already performed"
                  : "open:" + shapes);
  }

  // 6: the closure criterion refuses to certify the bridge as redundant
  {
    UniverseBound bound;
    bound.max_depth = 0;
    bound.signature = {sy.b, sy.bp, sy.c, sy.cp, sy.d};
    bound.seeds = {sy.ft(sy.tc, sy.td)};
    std::vector<GroundClosure> inst;
    for (const Clause& k : cls)
      for (GroundClosure& gc : ground_instances(k, bound))
        inst.push_back(std::move(gc));
    Substitution empty;
    bool red = closure_redundant(cfg, GroundClosure(c7, empty), inst, bound,
                                 ClosureVariant::Horn);
    add("closure criterion retains the bridge", !red,
        red ? "criterion wrongly certified deletion"
            : "no system admits the deletion");
  }

  // 7: the run that keeps the bridge reaches the contradiction
  {
    ProverResult hr = saturate(cls, cfg, RegimeConfig::horn_closure(), {});
    bool ok = hr.status == ProverStatus::Unsatisfiable && hr.empty_clause >= 0;
    std::set<int> pids;
    if (ok)
      for (int id : proof_ids(hr)) pids.insert(id);
    auto in_proof = [&](const Clause& k) {
      for (int id : pids)
        if (variant(hr.records[(size_t)id].clause, k)) return true;
      return false;
    };
    ok = ok && in_proof(c6) && in_proof(c7) && in_proof(c8);
    std::ostringstream det;
    det << "generated " << hr.generated << ", proof size " << pids.size();
    add("closure-guided run refutes through the bridge", ok, det.str());
  }

  return rep;
}

}  // namespace dersat
