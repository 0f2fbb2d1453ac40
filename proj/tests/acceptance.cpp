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

// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "choreo/amendment.hpp"
#include "choreo/cc_semantics.hpp"
#include "choreo/projection.hpp"
#include "choreo/syntax.hpp"
#include "choreo/verifier.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace choreo;
using namespace choreo::verify;
using choreo::testing::CorpusEntry;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Limits limits(std::size_t depth, std::size_t bound = 6) {
  Limits l;
  l.depth = depth;
  l.search_bound = bound;
  return l;
}

std::size_t selection_count(const cc::Choreography& c) {
  return std::visit(
      Overloaded{
          [](const cc::Prefix& n) {
            return (std::holds_alternative<cc::Sel>(n.eta) ? 1u : 0u) +
                   selection_count(*n.cont);
          },
          [](const cc::Cond& n) {
            return selection_count(*n.then_branch) + selection_count(*n.else_branch);
          },
          [](const cc::RTCall& n) { return selection_count(*n.body); },
          [](const auto&) { return std::size_t{0}; },
      },
      c.node);
}

std::size_t selection_count(const cc::Program& p) {
  std::size_t n = selection_count(p.main);
  for (const auto& [name, proc] : p.procedures) n += selection_count(proc.body);
  return n;
}

Outcome unprojectable_buyer_seller() {
  Outcome o;
  auto prog = testing::load("buyer_seller_unprojectable").program;
  const Pid buyer("buyer");
  o.require(!projectable({}, prog.main, buyer), "projectable on buyer");
  std::optional<cc::Choreography> blame;
  project({}, prog.main, buyer, &blame);
  o.require(blame && std::holds_alternative<cc::Cond>(blame->node),
            "blame is not the conditional");
  auto result = epp(prog);
  o.require(!result.ok(), "epp defined");
  o.require(result.failures.size() == 1 && result.failures[0].process == buyer &&
                blame && result.failures[0].term == *blame,
            "epp failure does not name (conditional, buyer)");
  return o;
}

Outcome epp_golden() {
  Outcome o;
  auto result = epp(testing::load("buyer_seller").program);
  o.require(result.ok(), "not projectable");
  if (!result.ok()) return o;
  const Pid buyer("buyer"), seller("seller");
  auto expected =
      sp::Network::singleton(
          buyer, sp::send(seller, var("offer"),
                          sp::branch(seller, sp::recv(seller, Var("y"), sp::end()),
                                     sp::end()))) |
      sp::Network::singleton(
          seller,
          sp::recv(buyer, Var("x"),
                   sp::cond(le(var("price"), var("x")),
                            sp::choose(buyer, Label::kLeft,
                                       sp::send(buyer, var("product"), sp::end())),
                            sp::choose(buyer, Label::kRight, sp::end()))));
  o.require(result.program->network == expected, "network differs");
  o.require(syntax::render(result.program->network) == syntax::render(expected),
            "rendering differs");
  return o;
}

Outcome amendment_golden() {
  Outcome o;
  o.require(amend_program(testing::load("buyer_seller_unprojectable").program) ==
                testing::load("buyer_seller").program,
            "buyer/seller amendment");
  o.require(amend_program(testing::load("lingering_selection").program) ==
                testing::load("lingering_selection_amended").program,
            "lingering-selection amendment");
  auto proxy = testing::load("proxy").program;
  const auto& c = std::get<cc::Cond>(proxy.main.node);
  const Pid p("p"), q("q");
  o.require(amend_program(proxy).main ==
                cc::cond(p, c.guard, cc::sel(p, q, Label::kLeft, *c.then_branch),
                         cc::sel(p, q, Label::kRight, *c.else_branch)),
            "proxy amendment");
  return o;
}

Outcome naive_counterexample() {
  Outcome o;
  auto prog = testing::load("lingering_selection").program;
  auto start = Clock::now();
  auto report = check_naive_correspondence(prog, {}, limits(2));
  double elapsed = seconds_since(start);
  o.require(report.verdict == Verdict::kCounterexample, "verdict " +
                                                            std::string(to_string(report.verdict)));
  o.require(report.witness && testing::witness_replays(prog, *report.witness),
            "witness does not replay");
  o.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  std::ostringstream os;
  os << "witness " << (report.witness ? to_string(report.witness->trace) : "-") << ", "
     << elapsed << " s";
  if (o.pass) o.detail = os.str();
  return o;
}

Outcome delayed_conditional() {
  Outcome o;
  auto prog = testing::load("delayed_conditional").program;
  auto strict = check_intermediate_formulation(prog, {});
  o.require(strict.verdict == Verdict::kCounterexample, "intermediate: " +
                                                            std::string(to_string(strict.verdict)));
  o.require(strict.witness && testing::witness_replays(prog, *strict.witness),
            "witness does not replay");
  auto complete = check_amend_complete(prog, {});
  o.require(complete.verdict == Verdict::kHolds,
            "amend-complete: " + std::string(to_string(complete.verdict)));
  return o;
}

Outcome amendment_correspondence(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  auto start = Clock::now();
  std::size_t explored = 0;
  for (const auto& e : corpus) {
    for (auto check : {check_amend_complete, check_amend_sound}) {
      auto report = check(e.program, e.state, limits(6, 6));
      explored += report.stats.explored;
      o.require(report.verdict == Verdict::kHolds,
                e.name + ": " + report.check + " " + std::string(to_string(report.verdict)));
    }
  }
  double elapsed = seconds_since(start);
  o.require(elapsed <= 300.0, "took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail = std::to_string(corpus.size()) + " programs, " + std::to_string(explored) +
               " configurations, " + std::to_string(elapsed) + " s";
  }
  return o;
}

Outcome amendment_syntax(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  for (const auto& e : corpus) {
    auto ps = cc::pn(e.program);
    auto amended = amend_program(e.program);
    o.require(cc::wf(amended.main) && cc::program_wf(amended), e.name + ": not well-formed");
    o.require(projectable(amended.procedures, amended.main, ps), e.name + ": main");
    for (const auto& [name, proc] : amended.procedures) {
      o.require(projectable(amended.procedures, proc.body, ps),
                e.name + ": procedure " + name.str());
    }
    if (epp(e.program).ok()) o.require(amended == e.program, e.name + ": not identity");
    o.require(amend_program(amended) == amended, e.name + ": not idempotent");
  }
  return o;
}

Outcome sel_exp_oracle() {
  Outcome o;
  std::size_t bad = testing::sel_exp_disagreements();
  o.require(bad == 0, std::to_string(bad) + " disagreements");
  return o;
}

Outcome out_of_order() {
  Outcome o;
  auto e = testing::load("parallel_orders");
  std::vector<cc::Run> maximal;
  for (const auto& run : cc::traces(e.program.procedures, e.program.main, e.state, 10)) {
    if (cc::successors(e.program.procedures, run.chor, run.state).empty()) {
      maximal.push_back(run);
    }
  }
  o.require(maximal.size() == 2, std::to_string(maximal.size()) + " maximal traces");
  for (const auto& run : maximal) o.require(run.chor.is_end(), "run does not end");
  o.require(maximal.size() == 2 && maximal[0].state == maximal[1].state,
            "final states differ");
  return o;
}

Outcome implements_chain() {
  Outcome o;
  constexpr std::size_t kBound = 20;
  struct Case {
    std::string name;
    std::vector<Pid> inputs;
    Pid output;
  };
  for (const Case& c : {Case{"successor", {Pid("p")}, Pid("q")},
                        Case{"equality", {Pid("p"), Pid("q")}, Pid("r")}}) {
    auto prog = testing::load(c.name).program;
    auto table = syntax::parse_table(
        testing::read_text(testing::corpus_dir() + "/" + c.name + ".table"));
    if (!table.ok()) {
      o.require(false, c.name + ": table");
      continue;
    }
    bool small = true;
    for (const auto& [args, value] : table.value->entries) {
      for (Value v : args) small = small && v <= 3;
    }
    o.require(small && table.value->entries.size() ==
                           (c.inputs.size() == 1 ? 4u : 16u),
              c.name + ": table does not cover inputs <= 3");
    o.require(check_implements(prog, *table.value, c.inputs, c.output, kBound).verdict ==
                  Verdict::kHolds,
              c.name + ": implements");
    auto amended = amend_program(prog);
    std::size_t k = selection_count(amended) - selection_count(prog);
    o.require(check_implements(amended, *table.value, c.inputs, c.output, kBound + k)
                      .verdict == Verdict::kHolds,
              c.name + ": amended");
    auto net = epp(amended);
    o.require(net.ok() && check_implements(*net.program, *table.value, c.inputs, c.output,
                                           kBound + k)
                                  .verdict == Verdict::kHolds,
              c.name + ": projection of amendment");
  }
  FnTable nowhere;
  nowhere.arity = 1;
  for (Value n = 0; n <= 3; ++n) nowhere.entries.emplace(std::vector<Value>{n}, std::nullopt);
  o.require(check_implements(testing::load("loop").program, nowhere, {Pid("p")}, Pid("q"), 50)
                    .verdict == Verdict::kHolds,
            "loop reaches a terminal");
  return o;
}

Outcome epp_traces(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& e : corpus) {
    std::vector<cc::Program> programs{amend_program(e.program)};
    if (epp(e.program).ok()) programs.push_back(e.program);
    for (const auto& prog : programs) {
      auto report = check_epp_correspondence(prog, e.state, limits(5));
      ++checked;
      o.require(report.verdict == Verdict::kHolds,
                e.name + ": " + std::string(to_string(report.verdict)));
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " programs";
  return o;
}

}  // namespace

int main() {
  auto corpus = testing::full_corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"unprojectable buyer/seller choreography", unprojectable_buyer_seller},
      {"projection of the projectable buyer/seller choreography", epp_golden},
      {"amendment golden outputs", amendment_golden},
      {"original correspondence counterexample", naive_counterexample},
      {"step-by-step formulation counterexample", delayed_conditional},
      {"corrected completeness and soundness on the corpus",
       [&] { return amendment_correspondence(corpus); }},
      {"syntactic properties of amendment on the corpus",
       [&] { return amendment_syntax(corpus); }},
      {"selection expansion against the inductive definition", sel_exp_oracle},
      {"out-of-order execution of parallel orders", out_of_order},
      {"function implementation through amendment and projection", implements_chain},
      {"trace correspondence of projections on the corpus",
       [&] { return epp_traces(corpus); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
