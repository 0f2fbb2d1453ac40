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

#include <algorithm>
#include <set>

#include "choreo/cc.hpp"
#include "choreo/cc_semantics.hpp"
#include "doctest.h"
#include "support/corpus.hpp"

using namespace choreo;
using namespace choreo::cc;

namespace {

std::set<TransitionLabel> labels(const std::vector<Step>& steps) {
  std::set<TransitionLabel> out;
  for (const auto& s : steps) out.insert(s.label);
  return out;
}

const Pid p("p"), q("q"), r("r"), o("o"), o2("o'"), p2("p'");

}  // namespace

TEST_CASE("state reads back written values and defaults to zero") {
  State s;
  CHECK(s.get(p, Var("x")) == 0);
  State t = s.updated(p, Var("x"), 5);
  CHECK(t.get(p, Var("x")) == 5);
  CHECK(s.get(p, Var("x")) == 0);
  CHECK(t.updated(p, Var("x"), 0) == s);
  CHECK(t.updated(q, Var("x"), 0) == t);
}

TEST_CASE("expressions evaluate at the given process") {
  State s = State().updated(p, Var("x"), 4).updated(q, Var("x"), 9);
  CHECK(eval(lit(2), s, p) == 2);
  CHECK(eval(var("x"), s, p) == 4);
  CHECK(eval(succ(succ(var("x"))), s, q) == 11);
  CHECK(beval(eq(var("x"), lit(4)), s, p));
  CHECK_FALSE(beval(eq(var("x"), lit(4)), s, q));
  CHECK(beval(le(var("x"), var("y")), s, Pid("z")));
  CHECK(beval(btrue(), s, p));
  CHECK_FALSE(beval(bfalse(), s, p));
}

TEST_CASE("well-formedness rejects self-communication") {
  CHECK(wf(com(p, lit(1), q, Var("x"), end())));
  CHECK_FALSE(wf(com(p, lit(1), p, Var("x"), end())));
  CHECK_FALSE(wf(cond(q, btrue(), end(), sel(p, p, Label::kLeft, end()))));
  CHECK_THROWS_AS(enabled({}, com(p, lit(1), p, Var("x"), end()), {}),
                  std::invalid_argument);
}

TEST_CASE("program well-formedness") {
  Program ok{{{RecVar("X"), {{p, q}, com(p, lit(0), q, Var("x"), call(RecVar("X")))}}},
             call(RecVar("X"))};
  CHECK(program_wf(ok));
  CHECK(pn(ok) == std::vector<Pid>{p, q});

  Program undefined{{}, call(RecVar("Y"))};
  CHECK_FALSE(program_wf(undefined));

  Program undeclared{{{RecVar("X"), {{p}, com(p, lit(0), q, Var("x"), end())}}},
                     call(RecVar("X"))};
  CHECK_FALSE(program_wf(undeclared));
}

TEST_CASE("communication evaluates at the sender and stores at the receiver") {
  State s = State().updated(p, Var("e"), 7);
  auto steps = enabled({}, com(p, succ(var("e")), q, Var("x"), end()), s);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].label == TransitionLabel(TLCom{p, 8, q}));
  CHECK(steps[0].next == end());
  CHECK(steps[0].state == s.updated(q, Var("x"), 8));
}

TEST_CASE("selection leaves the state unchanged") {
  auto steps = enabled({}, sel(p, q, Label::kRight, end()), {});
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].label == TransitionLabel(TLSel{p, q, Label::kRight}));
  CHECK(steps[0].state == State());
}

TEST_CASE("conditional takes the branch selected by the guard") {
  auto c = cond(p, eq(var("b"), lit(1)), sel(p, q, Label::kLeft, end()),
                sel(p, r, Label::kLeft, end()));
  auto then_steps = enabled({}, c, State().updated(p, Var("b"), 1));
  REQUIRE(then_steps.size() == 1);
  CHECK(then_steps[0].label == TransitionLabel(TLTau{p}));
  CHECK(then_steps[0].next == sel(p, q, Label::kLeft, end()));
  auto else_steps = enabled({}, c, {});
  REQUIRE(else_steps.size() == 1);
  CHECK(else_steps[0].next == sel(p, r, Label::kLeft, end()));
}

TEST_CASE("independent actions are delayed past a prefix") {
  // p.e -> q.x; if r.b == 0 then { r.e' -> p.y; end } else { end }
  auto c = com(p, var("e"), q, Var("x"),
               cond(r, eq(var("b"), lit(0)),
                    com(r, var("e'"), p, Var("y"), end()), end()));
  auto steps = enabled({}, c, {});
  CHECK(labels(steps) == std::set<TransitionLabel>{TLCom{p, 0, q}, TLTau{r}});
  auto delayed = std::find_if(steps.begin(), steps.end(), [](const Step& s) {
    return s.label == TransitionLabel(TLTau{Pid("r")});
  });
  REQUIRE(delayed != steps.end());
  CHECK(delayed->next ==
        com(p, var("e"), q, Var("x"), com(r, var("e'"), p, Var("y"), end())));

  // The delayed action may not involve a process of the prefix.
  auto blocked = com(p, var("e"), q, Var("x"), com(q, var("e"), r, Var("y"), end()));
  CHECK(labels(enabled({}, blocked, {})) ==
        std::set<TransitionLabel>{TLCom{p, 0, q}});
}

TEST_CASE("a common action of both branches runs before the guard") {
  auto c = cond(p, eq(var("b"), lit(0)),
                com(q, var("e"), r, Var("x"), com(q, var("e"), p, Var("x"), end())),
                com(q, var("e"), r, Var("x"), end()));
  auto steps = enabled({}, c, {});
  CHECK(labels(steps) == std::set<TransitionLabel>{TLCom{q, 0, r}, TLTau{p}});
  auto early = std::find_if(steps.begin(), steps.end(), [](const Step& s) {
    return std::holds_alternative<TLCom>(s.label);
  });
  CHECK(early->next ==
        cond(p, eq(var("b"), lit(0)), com(q, var("e"), p, Var("x"), end()), end()));

  // The delay needs the same label in both branches.
  auto differ = cond(p, btrue(), com(q, var("e"), r, Var("x"), end()),
                     com(q, lit(1), r, Var("x"), end()));
  CHECK(labels(enabled({}, differ, State().updated(q, Var("e"), 1))) ==
        std::set<TransitionLabel>{TLCom{q, 1, r}, TLTau{p}});
  CHECK(labels(enabled({}, differ, State().updated(q, Var("e"), 5))) ==
        std::set<TransitionLabel>{TLTau{p}});
  // The evaluator itself cannot act before its own guard.
  auto own = cond(p, btrue(), com(p, lit(0), q, Var("x"), end()),
                  com(p, lit(0), q, Var("x"), end()));
  CHECK(labels(enabled({}, own, {})) == std::set<TransitionLabel>{TLTau{p}});
}

TEST_CASE("procedure calls are entered one process at a time") {
  DefSet defs{{RecVar("Loop"), {{p, q}, com(p, lit(0), q, Var("x"), call(RecVar("Loop")))}}};
  auto steps = enabled(defs, call(RecVar("Loop")), {});
  CHECK(labels(steps) == std::set<TransitionLabel>{TLTau{p}, TLTau{q}});
  auto body = com(p, lit(0), q, Var("x"), call(RecVar("Loop")));
  CHECK(std::find_if(steps.begin(), steps.end(), [&](const Step& s) {
          return s.next == rt_call(RecVar("Loop"), {q}, body);
        }) != steps.end());
  // The body's communication needs q, which has not entered yet.
  auto partial = enabled(defs, rt_call(RecVar("Loop"), {q}, body), {});
  REQUIRE(partial.size() == 1);
  CHECK(partial[0].label == TransitionLabel(TLTau{q}));
  CHECK(partial[0].next == body);

  DefSet single{{RecVar("S"), {{p}, end()}}};
  auto direct = enabled(single, call(RecVar("S")), {});
  REQUIRE(direct.size() == 1);
  CHECK(direct[0].next == end());
}

TEST_CASE("parallel orders run in either order to the same state") {
  auto c = com(o, var("order"), p, Var("x"),
               com(o2, var("order'"), p2, Var("y"), end()));
  State s = State().updated(o, Var("order"), 3).updated(o2, Var("order'"), 5);
  std::vector<Run> maximal;
  for (const auto& run : traces({}, c, s, 10)) {
    if (successors({}, run.chor, run.state).empty()) maximal.push_back(run);
  }
  REQUIRE(maximal.size() == 2);
  CHECK(maximal[0].trace != maximal[1].trace);
  CHECK(maximal[0].chor == end());
  CHECK(maximal[1].chor == end());
  CHECK(maximal[0].state == maximal[1].state);
  CHECK(maximal[0].state.get(p, Var("x")) == 3);
  CHECK(maximal[0].state.get(p2, Var("y")) == 5);
}

TEST_CASE("replay reproduces traces") {
  auto entry = testing::load("lingering_selection");
  for (const auto& run :
       traces(entry.program.procedures, entry.program.main, entry.state, 4)) {
    auto reached =
        replay(entry.program.procedures, entry.program.main, entry.state, run.trace);
    CHECK(std::find(reached.begin(), reached.end(), Config{run.chor, run.state}) !=
          reached.end());
  }
}

TEST_CASE("corpus properties: determinism, well-formedness, scoping") {
  for (const auto& entry : testing::full_corpus()) {
    CAPTURE(entry.name);
    const auto& defs = entry.program.procedures;
    auto pids = pn(entry.program);
    for (const auto& run : traces(defs, entry.program.main, entry.state, 4)) {
      auto steps = enabled(defs, run.chor, run.state);
      CHECK(std::is_sorted(steps.begin(), steps.end()));
      for (std::size_t i = 0; i < steps.size(); ++i) {
        CHECK(wf(steps[i].next));
        for (const auto& pid : processes(steps[i].label)) {
          CHECK(std::binary_search(pids.begin(), pids.end(), pid));
        }
        for (std::size_t j = i + 1; j < steps.size(); ++j) {
          if (steps[i].label == steps[j].label) {
            CHECK(steps[i].next == steps[j].next);
            CHECK(steps[i].state == steps[j].state);
          }
        }
      }
    }
  }
}
