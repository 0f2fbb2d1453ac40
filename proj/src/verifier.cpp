/*
 * Copyright (c) 2026, The choreo authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "choreo/verifier.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

#include "choreo/amendment.hpp"
#include "choreo/cc_semantics.hpp"
#include "choreo/projection.hpp"
#include "choreo/sp_semantics.hpp"

namespace choreo::verify {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds-within-bound";
    case Verdict::kCounterexample:
      return "counterexample";
    case Verdict::kResourceExhausted:
      return "resource-exhausted";
  }
  return "?";
}

std::string_view to_string(System s) {
  switch (s) {
    case System::kOriginal:
      return "original";
    case System::kAmended:
      return "amended";
    case System::kNetwork:
      return "network";
  }
  return "?";
}

namespace {

struct Budget {
  std::size_t limit;
  std::size_t used = 0;
  bool exhausted = false;

  bool charge() {
    if (used >= limit) {
      exhausted = true;
      return false;
    }
    ++used;
    return true;
  }
};

void bag_insert(Trace& bag, const TransitionLabel& t) {
  bag.insert(std::upper_bound(bag.begin(), bag.end(), t), t);
}

Trace bag_union(const Trace& a, const Trace& b) {
  Trace out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t non_selections(const Trace& bag) {
  return static_cast<std::size_t>(std::count_if(
      bag.begin(), bag.end(),
      [](const TransitionLabel& t) { return !is_selection(t); }));
}

// A configuration together with the multiset of labels (kept sorted) that
// led to it. The correspondence checks only look at label multisets, so
// traces that differ by a permutation share a node.
template <class Cfg>
struct BagNode {
  Cfg cfg;
  Trace bag;
  friend bool operator==(const BagNode&, const BagNode&) = default;
  friend std::strong_ordering operator<=>(const BagNode&,
                                          const BagNode&) = default;
};

template <class Cfg>
struct Exploration {
  using Map = std::map<BagNode<Cfg>, Trace>;
  /// Node -> shortest trace reaching it.
  Map nodes;
  /// Discovery order (breadth first).
  std::vector<typename Map::const_iterator> order;
  /// Some step was refused by the bound or the budget.
  bool truncated = false;
};

template <class Cfg>
using Successors = std::vector<std::pair<TransitionLabel, Cfg>>;

template <class Cfg, class Succ, class MayTake>
Exploration<Cfg> explore(const Cfg& init, const Succ& succ,
                         const MayTake& may_take, Budget& budget,
                         Stats& stats) {
  Exploration<Cfg> ex;
  std::deque<typename Exploration<Cfg>::Map::const_iterator> queue;
  auto first = ex.nodes.emplace(BagNode<Cfg>{init, {}}, Trace{}).first;
  queue.push_back(first);
  ex.order.push_back(first);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (auto& [label, next] : succ(cur->first.cfg)) {
      if (!may_take(cur->first.bag, label)) {
        ex.truncated = true;
        continue;
      }
      BagNode<Cfg> node{std::move(next), cur->first.bag};
      bag_insert(node.bag, label);
      if (ex.nodes.contains(node)) continue;
      if (!budget.charge()) {
        ex.truncated = true;
        return ex;
      }
      Trace trace = cur->second;
      trace.push_back(label);
      stats.max_depth = std::max(stats.max_depth, trace.size());
      auto it = ex.nodes.emplace(std::move(node), std::move(trace)).first;
      queue.push_back(it);
      ex.order.push_back(it);
    }
  }
  return ex;
}

auto cc_successors(const cc::DefSet& defs) {
  return [&defs](const cc::Config& c) {
    Successors<cc::Config> out;
    for (auto& st : cc::successors(defs, c.chor, c.state)) {
      out.emplace_back(std::move(st.label),
                       cc::Config{std::move(st.next), std::move(st.state)});
    }
    return out;
  };
}

auto sp_successors(const sp::DefSet& defs) {
  return [&defs](const sp::Config& c) {
    Successors<sp::Config> out;
    for (auto& st : sp::successors(defs, c.network, c.state)) {
      out.emplace_back(std::move(st.label),
                       sp::Config{std::move(st.next), std::move(st.state)});
    }
    return out;
  };
}

auto within_steps(std::size_t n) {
  return [n](const Trace& bag, const TransitionLabel&) {
    return bag.size() < n;
  };
}

// Selections are free; other labels are limited to `n`. Selections between
// two other steps are finitely many since each consumes a syntactic term.
auto within_non_selections(std::size_t n) {
  return [n](const Trace& bag, const TransitionLabel& t) {
    return is_selection(t) || non_selections(bag) < n;
  };
}

using BagIndex = std::map<cc::Config, std::vector<const Trace*>>;

class Amender {
 public:
  Amender(const cc::DefSet& defs, std::vector<Pid> ps)
      : defs_(defs), ps_(std::move(ps)) {}

  const cc::Choreography& operator()(const cc::Choreography& c) {
    auto it = cache_.find(c);
    if (it == cache_.end()) it = cache_.emplace(c, amend(defs_, ps_, c)).first;
    return it->second;
  }

  const std::vector<Pid>& processes() const { return ps_; }

 private:
  const cc::DefSet& defs_;
  std::vector<Pid> ps_;
  std::map<cc::Choreography, cc::Choreography> cache_;
};

void require_wf(const cc::Program& p, const char* what) {
  if (!cc::program_wf(p)) {
    throw std::invalid_argument(std::string(what) +
                                ": program is not well-formed");
  }
}

Witness make_witness(std::string summary, System system, const State& init,
                     Trace trace, const cc::Config& reached) {
  Witness w;
  w.summary = std::move(summary);
  w.system = system;
  w.initial_state = init;
  w.trace = std::move(trace);
  w.choreography = reached.chor;
  w.state = reached.state;
  return w;
}

Witness make_witness(std::string summary, System system, const State& init,
                     Trace trace, const sp::Config& reached) {
  Witness w;
  w.summary = std::move(summary);
  w.system = system;
  w.initial_state = init;
  w.trace = std::move(trace);
  w.network = reached.network;
  w.state = reached.state;
  return w;
}

// Collects the verdict of a check that inspects many obligations.
class Verdicts {
 public:
  explicit Verdicts(Report& report) : report_(report) {}

  void counterexample(Witness w) {
    report_.verdict = Verdict::kCounterexample;
    report_.witness = std::move(w);
  }

  void inconclusive(std::string note) {
    if (!inconclusive_) report_.note = std::move(note);
    inconclusive_ = true;
  }

  bool found() const {
    return report_.verdict == Verdict::kCounterexample;
  }

  Report finish(const Budget& budget) {
    report_.stats.explored = budget.used;
    if (found()) return report_;
    if (budget.exhausted) {
      report_.verdict = Verdict::kResourceExhausted;
      report_.note = "state budget of " + std::to_string(budget.limit) +
                     " nodes exhausted";
    } else if (inconclusive_) {
      report_.verdict = Verdict::kResourceExhausted;
    } else {
      report_.verdict = Verdict::kHolds;
    }
    return report_;
  }

 private:
  Report& report_;
  bool inconclusive_ = false;
};

BagIndex index_by_config(const Exploration<cc::Config>& ex) {
  BagIndex index;
  for (const auto& [node, trace] : ex.nodes) {
    index[node.cfg].push_back(&node.bag);
  }
  return index;
}

template <class Accept>
bool any_bag(const BagIndex& index, const cc::Config& key,
             const Accept& accept) {
  auto it = index.find(key);
  if (it == index.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(),
                     [&](const Trace* bag) { return accept(*bag); });
}

}  // namespace

Report check_naive_correspondence(const cc::Program& p, const State& s,
                                  const Limits& limits) {
  require_wf(p, "check_naive_correspondence");
  Report report;
  report.check = "naive";
  Verdicts verdicts(report);
  Budget budget{limits.state_budget};
  const auto ps = cc::pn(p);
  const auto amended_defs = amend_defs(p.procedures, ps);
  Amender amender(p.procedures, ps);

  // A matching trace has the same non-selection labels as the original one,
  // so bounding those makes the amended search exhaustive.
  auto amended = explore(cc::Config{amender(p.main), s},
                         cc_successors(amended_defs),
                         within_non_selections(limits.depth), budget,
                         report.stats);
  auto index = index_by_config(amended);
  auto original = explore(cc::Config{p.main, s}, cc_successors(p.procedures),
                          within_steps(limits.depth), budget, report.stats);
  if (budget.exhausted) return verdicts.finish(budget);

  for (auto it : original.order) {
    const auto& [node, trace] = *it;
    cc::Config target{amender(node.cfg.chor), node.cfg.state};
    if (!any_bag(index, target,
                 [&](const Trace& bag) { return sel_exp(node.bag, bag); })) {
      verdicts.counterexample(make_witness(
          "the amended program cannot reach the amendment of this "
          "configuration",
          System::kOriginal, s, trace, node.cfg));
      break;
    }
  }
  return verdicts.finish(budget);
}

Report check_amend_complete(const cc::Program& p, const State& s,
                            const Limits& limits) {
  require_wf(p, "check_amend_complete");
  Report report;
  report.check = "amend-complete";
  Verdicts verdicts(report);
  Budget budget{limits.state_budget};
  const auto ps = cc::pn(p);
  const auto amended_defs = amend_defs(p.procedures, ps);
  Amender amender(p.procedures, ps);
  auto original_step = cc_successors(p.procedures);

  auto amended = explore(
      cc::Config{amender(p.main), s}, cc_successors(amended_defs),
      within_non_selections(limits.depth + limits.search_bound), budget,
      report.stats);
  auto index = index_by_config(amended);
  auto original = explore(cc::Config{p.main, s}, original_step,
                          within_steps(limits.depth), budget, report.stats);

  for (auto it : original.order) {
    if (budget.exhausted) break;
    const auto& [node, trace] = *it;
    auto extensions =
        explore(node.cfg, original_step, within_steps(limits.search_bound),
                budget, report.stats);
    bool matched = false;
    for (auto ext : extensions.order) {
      const auto& [end, extra] = *ext;
      Trace expected = bag_union(node.bag, end.bag);
      cc::Config target{amender(end.cfg.chor), end.cfg.state};
      if (any_bag(index, target, [&](const Trace& bag) {
            return sel_exp(expected, bag);
          })) {
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (extensions.truncated) {
      verdicts.inconclusive("no match within search bound after " +
                            to_string(trace));
      continue;
    }
    verdicts.counterexample(make_witness(
        "no continuation of this configuration is matched by the amended "
        "program",
        System::kOriginal, s, trace, node.cfg));
    break;
  }
  return verdicts.finish(budget);
}

Report check_amend_sound(const cc::Program& p, const State& s,
                         const Limits& limits) {
  require_wf(p, "check_amend_sound");
  Report report;
  report.check = "amend-sound";
  Verdicts verdicts(report);
  Budget budget{limits.state_budget};
  const auto ps = cc::pn(p);
  const auto amended_defs = amend_defs(p.procedures, ps);
  Amender amender(p.procedures, ps);
  auto amended_step = cc_successors(amended_defs);

  // Original configurations, indexed by their amendment.
  auto original = explore(cc::Config{p.main, s}, cc_successors(p.procedures),
                          within_steps(limits.depth + limits.search_bound),
                          budget, report.stats);
  BagIndex index;
  for (const auto& [node, trace] : original.nodes) {
    index[cc::Config{amender(node.cfg.chor), node.cfg.state}].push_back(
        &node.bag);
  }
  const cc::Config start{amender(p.main), s};
  auto amended = explore(start, amended_step, within_steps(limits.depth),
                         budget, report.stats);

  for (auto it : amended.order) {
    if (budget.exhausted) break;
    const auto& [node, trace] = *it;
    auto extensions =
        explore(node.cfg, amended_step, within_steps(limits.search_bound),
                budget, report.stats);
    bool matched = false;
    for (auto ext : extensions.order) {
      const auto& [end, extra] = *ext;
      Trace performed = bag_union(node.bag, end.bag);
      if (any_bag(index, end.cfg, [&](const Trace& bag) {
            return sel_exp(bag, performed);
          })) {
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (extensions.truncated) {
      verdicts.inconclusive("no match within search bound after " +
                            to_string(trace));
      continue;
    }
    verdicts.counterexample(make_witness(
        "no continuation of this amended configuration corresponds to an "
        "execution of the original program",
        System::kAmended, s, trace, node.cfg));
    break;
  }
  return verdicts.finish(budget);
}

namespace {

struct Pair {
  cc::Config original;
  cc::Config amended;
  friend bool operator==(const Pair&, const Pair&) = default;
  friend std::strong_ordering operator<=>(const Pair&, const Pair&) = default;
};

enum class CatchUp { kFound, kExhausted, kTruncated };

// Lock-step search: both sides perform the same labels, and the amended side
// may additionally perform selections on its own. Joint steps are bounded.
CatchUp catch_up(const std::vector<Pair>& starts, const cc::DefSet& defs,
                 const cc::DefSet& amended_defs, Amender& amender,
                 std::size_t bound, Budget& budget) {
  std::set<Pair> seen(starts.begin(), starts.end());
  std::vector<Pair> level = starts;
  bool truncated = false;
  for (std::size_t joint = 0;; ++joint) {
    // Close the level under amended-only selections.
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Pair cur = level[i];
      if (cur.amended.chor == amender(cur.original.chor) &&
          cur.amended.state == cur.original.state) {
        return CatchUp::kFound;
      }
      for (auto& st : cc::successors(amended_defs, cur.amended.chor,
                                     cur.amended.state)) {
        if (!is_selection(st.label)) continue;
        Pair next{cur.original, {std::move(st.next), std::move(st.state)}};
        if (seen.contains(next)) continue;
        if (!budget.charge()) return CatchUp::kTruncated;
        seen.insert(next);
        level.push_back(std::move(next));
      }
    }
    std::vector<Pair> next_level;
    for (const auto& cur : level) {
      auto lefts =
          cc::successors(defs, cur.original.chor, cur.original.state);
      if (lefts.empty()) continue;
      if (joint >= bound) {
        truncated = true;
        continue;
      }
      auto rights =
          cc::successors(amended_defs, cur.amended.chor, cur.amended.state);
      for (const auto& a : lefts) {
        for (const auto& b : rights) {
          if (a.label != b.label) continue;
          Pair next{{a.next, a.state}, {b.next, b.state}};
          if (seen.contains(next)) continue;
          if (!budget.charge()) return CatchUp::kTruncated;
          seen.insert(next);
          next_level.push_back(std::move(next));
        }
      }
    }
    if (next_level.empty()) {
      return truncated ? CatchUp::kTruncated : CatchUp::kExhausted;
    }
    level = std::move(next_level);
  }
}

}  // namespace

Report check_intermediate_formulation(const cc::Program& p, const State& s,
                                      const Limits& limits) {
  require_wf(p, "check_intermediate_formulation");
  Report report;
  report.check = "intermediate";
  Verdicts verdicts(report);
  Budget budget{limits.state_budget};
  const auto ps = cc::pn(p);
  const auto amended_defs = amend_defs(p.procedures, ps);
  Amender amender(p.procedures, ps);

  if (limits.depth == 0) return verdicts.finish(budget);
  auto original =
      explore(cc::Config{p.main, s}, cc_successors(p.procedures),
              within_steps(limits.depth - 1), budget, report.stats);

  // The one-step statement quantifies over every choreography; it is applied
  // to each reachable one paired with its amendment.
  std::set<cc::Config> checked;
  for (auto it : original.order) {
    if (budget.exhausted || verdicts.found()) break;
    const auto& [node, trace] = *it;
    if (!checked.insert(node.cfg).second) continue;
    const auto& amended_here = amender(node.cfg.chor);
    auto amended_steps =
        cc::successors(amended_defs, amended_here, node.cfg.state);
    for (const auto& first :
         cc::successors(p.procedures, node.cfg.chor, node.cfg.state)) {
      std::vector<Pair> starts;
      for (const auto& st : amended_steps) {
        if (st.label == first.label) {
          starts.push_back({{first.next, first.state}, {st.next, st.state}});
        }
      }
      Trace witness_trace = trace;
      witness_trace.push_back(first.label);
      CatchUp result = starts.empty()
                           ? CatchUp::kExhausted
                           : catch_up(starts, p.procedures, amended_defs,
                                      amender, limits.search_bound, budget);
      if (result == CatchUp::kFound) continue;
      if (result == CatchUp::kTruncated) {
        verdicts.inconclusive("no catch-up within search bound after " +
                              to_string(witness_trace));
        continue;
      }
      verdicts.counterexample(make_witness(
          starts.empty() ? "the amendment cannot perform " +
                               to_string(first.label) + " first"
                         : "the amendment cannot catch up after " +
                               to_string(first.label),
          System::kOriginal, s, witness_trace,
          cc::Config{first.next, first.state}));
      break;
    }
  }
  return verdicts.finish(budget);
}

namespace {

// Every label trace of length <= depth, with one configuration reached by it.
template <class Cfg, class Succ>
std::map<Trace, Cfg> trace_set(const Cfg& init, const Succ& succ,
                               std::size_t depth, Budget& budget,
                               Stats& stats) {
  std::map<Trace, Cfg> all{{Trace{}, init}};
  std::vector<std::pair<Trace, Cfg>> frontier{{Trace{}, init}};
  for (std::size_t d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<std::pair<Trace, Cfg>> next;
    for (const auto& [trace, cfg] : frontier) {
      for (auto& [label, to] : succ(cfg)) {
        if (!budget.charge()) return all;
        Trace longer = trace;
        longer.push_back(label);
        stats.max_depth = std::max(stats.max_depth, longer.size());
        all.emplace(longer, to);
        next.emplace_back(std::move(longer), std::move(to));
      }
    }
    frontier = std::move(next);
  }
  return all;
}

bool shorter_first(const Trace& a, const Trace& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Report check_epp_correspondence(const cc::Program& p, const State& s,
                                const Limits& limits) {
  require_wf(p, "check_epp_correspondence");
  auto projected = epp(p);
  if (!projected.ok()) {
    throw std::invalid_argument(
        "check_epp_correspondence: program is not projectable");
  }
  Report report;
  report.check = "epp";
  Verdicts verdicts(report);
  Budget budget{limits.state_budget};
  const auto& net = *projected.program;

  auto chor_traces =
      trace_set(cc::Config{p.main, s}, cc_successors(p.procedures),
                limits.depth, budget, report.stats);
  auto net_traces =
      trace_set(sp::Config{net.network, s}, sp_successors(net.procedures),
                limits.depth, budget, report.stats);
  if (budget.exhausted) return verdicts.finish(budget);

  std::optional<Trace> only_chor;
  for (const auto& [trace, cfg] : chor_traces) {
    if (!net_traces.contains(trace) &&
        (!only_chor || shorter_first(trace, *only_chor))) {
      only_chor = trace;
    }
  }
  std::optional<Trace> only_net;
  for (const auto& [trace, cfg] : net_traces) {
    if (!chor_traces.contains(trace) &&
        (!only_net || shorter_first(trace, *only_net))) {
      only_net = trace;
    }
  }
  if (only_chor && (!only_net || !shorter_first(*only_net, *only_chor))) {
    verdicts.counterexample(make_witness(
        "trace of the choreography not performed by its projection",
        System::kOriginal, s, *only_chor, chor_traces.at(*only_chor)));
  } else if (only_net) {
    verdicts.counterexample(make_witness(
        "trace of the projection not performed by the choreography",
        System::kNetwork, s, *only_net, net_traces.at(*only_net)));
  }
  return verdicts.finish(budget);
}

namespace {

State input_state(const std::vector<Pid>& inputs,
                  const std::vector<Value>& values) {
  State s;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    s.set(inputs[i], Var("x"), values[i]);
  }
  return s;
}

std::string describe_inputs(const std::vector<Value>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

// Breadth-first run over all executions of length <= bound.
// True when the explored part of the transition graph has a cycle.
template <class Cfg, class Succ>
bool revisits_configuration(const std::map<Cfg, Trace>& seen, const Succ& succ) {
  enum class Mark { kOpen, kDone };
  std::map<const Cfg*, Mark> marks;
  for (const auto& root : seen) {
    if (marks.contains(&root.first)) continue;
    std::vector<std::pair<const Cfg*, std::vector<const Cfg*>>> stack;
    auto children = [&](const Cfg& cfg) {
      std::vector<const Cfg*> out;
      for (const auto& step : succ(cfg)) {
        auto it = seen.find(step.second);
        if (it != seen.end()) out.push_back(&it->first);
      }
      return out;
    };
    marks[&root.first] = Mark::kOpen;
    stack.emplace_back(&root.first, children(root.first));
    while (!stack.empty()) {
      auto& [node, todo] = stack.back();
      if (todo.empty()) {
        marks[node] = Mark::kDone;
        stack.pop_back();
        continue;
      }
      const Cfg* child = todo.back();
      todo.pop_back();
      auto mark = marks.find(child);
      if (mark != marks.end()) {
        if (mark->second == Mark::kOpen) return true;
        continue;
      }
      marks[child] = Mark::kOpen;
      stack.emplace_back(child, children(*child));
    }
  }
  return false;
}

template <class Cfg, class Succ, class Terminated>
Report run_table(const std::string& check, const FnTable& table,
                 const std::vector<Pid>& inputs, const Pid& output,
                 std::size_t bound, std::size_t state_budget,
                 const std::function<Cfg(const State&)>& start,
                 const Succ& succ, const Terminated& terminated,
                 System system) {
  if (inputs.size() != table.arity) {
    throw std::invalid_argument(check + ": arity mismatch");
  }
  Report report;
  report.check = check;
  Verdicts verdicts(report);
  Budget budget{state_budget};
  const Var x("x");

  for (const auto& [args, expected] : table.entries) {
    if (args.size() != table.arity) {
      throw std::invalid_argument(check + ": table entry has wrong arity");
    }
    const State init = input_state(inputs, args);
    std::map<Cfg, Trace> seen{{start(init), Trace{}}};
    std::vector<typename std::map<Cfg, Trace>::const_iterator> frontier{
        seen.begin()};
    bool unfinished = false;
    for (std::size_t d = 0; !frontier.empty() && !verdicts.found(); ++d) {
      std::vector<typename std::map<Cfg, Trace>::const_iterator> next;
      for (auto it : frontier) {
        const auto& [cfg, trace] = *it;
        auto steps = succ(cfg);
        if (steps.empty()) {
          const bool done = terminated(cfg);
          std::string problem;
          if (!expected) {
            if (done) problem = "terminates although undefined";
          } else if (!done) {
            problem = "execution is stuck";
          } else if (cfg.state.get(output, x) != *expected) {
            problem = "wrong output " +
                      std::to_string(cfg.state.get(output, x)) +
                      ", expected " + std::to_string(*expected);
          }
          if (!problem.empty()) {
            verdicts.counterexample(
                make_witness("input " + describe_inputs(args) + ": " + problem,
                             system, init, trace, cfg));
            break;
          }
          continue;
        }
        if (d >= bound) {
          unfinished = true;
          continue;
        }
        for (auto& [label, to] : steps) {
          if (seen.contains(to)) continue;
          if (!budget.charge()) break;
          Trace longer = trace;
          longer.push_back(label);
          report.stats.max_depth =
              std::max(report.stats.max_depth, longer.size());
          next.push_back(seen.emplace(std::move(to), std::move(longer)).first);
        }
      }
      frontier = std::move(next);
    }
    if (verdicts.found() || budget.exhausted) break;
    // Undefined points only ever get negative evidence: no termination
    // within the bound.
    if (expected && !unfinished && revisits_configuration(seen, succ)) {
      verdicts.inconclusive("input " + describe_inputs(args) +
                            ": an execution runs into a cycle");
    } else if (unfinished && expected) {
      verdicts.inconclusive("input " + describe_inputs(args) +
                            ": not all executions terminate within bound");
    }
  }
  return verdicts.finish(budget);
}

}  // namespace

Report check_implements(const cc::Program& p, const FnTable& table,
                        const std::vector<Pid>& inputs, const Pid& output,
                        std::size_t bound, std::size_t state_budget) {
  require_wf(p, "check_implements");
  return run_table<cc::Config>(
      "implements", table, inputs, output, bound, state_budget,
      [&](const State& s) { return cc::Config{p.main, s}; },
      cc_successors(p.procedures),
      [](const cc::Config& c) { return c.chor.is_end(); }, System::kOriginal);
}

Report check_implements(const sp::Program& p, const FnTable& table,
                        const std::vector<Pid>& inputs, const Pid& output,
                        std::size_t bound, std::size_t state_budget) {
  if (!sp::wf(p.network)) {
    throw std::invalid_argument("check_implements: network is not well-formed");
  }
  return run_table<sp::Config>(
      "sp-implements", table, inputs, output, bound, state_budget,
      [&](const State& s) { return sp::Config{p.network, s}; },
      sp_successors(p.procedures),
      [](const sp::Config& c) { return c.network.empty(); }, System::kNetwork);
}

}  // namespace choreo::verify
