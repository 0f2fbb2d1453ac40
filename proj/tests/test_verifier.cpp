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

#include "choreo/amendment.hpp"
#include "choreo/cc_semantics.hpp"
#include "choreo/projection.hpp"
#include "choreo/report.hpp"
#include "choreo/sp_semantics.hpp"
#include "choreo/syntax.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace choreo;
using namespace choreo::verify;

namespace {

const Pid p("p"), q("q"), r("r");

Limits limits(std::size_t depth, std::size_t bound = 6) {
  Limits l;
  l.depth = depth;
  l.search_bound = bound;
  return l;
}

cc::Program end_program() { return {{}, cc::end()}; }

FnTable table(std::size_t arity,
              std::initializer_list<std::pair<std::vector<Value>, std::optional<Value>>> rows) {
  FnTable t;
  t.arity = arity;
  for (const auto& [k, v] : rows) t.entries.emplace(k, v);
  return t;
}

void check_replays(const cc::Program& program, const Witness& w) {
  CHECK(testing::witness_replays(program, w));
}

}  // namespace

TEST_CASE("the original correspondence fails on the lingering-selection example") {
  auto prog = testing::load("lingering_selection").program;
  auto report = check_naive_correspondence(prog, {}, limits(2));
  CHECK(report.verdict == Verdict::kCounterexample);
  REQUIRE(report.witness);
  check_replays(prog, *report.witness);
  CHECK(report.witness->choreography ==
        cc::com(p, var("e"), q, Var("x"), cc::com(r, var("e'"), p, Var("y"), cc::end())));
  for (std::size_t d = 3; d <= 6; ++d) {
    CHECK(check_naive_correspondence(prog, {}, limits(d)).verdict ==
          Verdict::kCounterexample);
  }
}

TEST_CASE("the original correspondence holds when amendment is the identity") {
  CHECK(check_naive_correspondence(testing::load("parallel_orders").program, {}, limits(3))
            .verdict == Verdict::kHolds);
  auto bs = testing::load("buyer_seller");
  CHECK(check_naive_correspondence(bs.program, bs.state, limits(4)).verdict ==
        Verdict::kHolds);
}

TEST_CASE("completeness of amendment") {
  CHECK(check_amend_complete(testing::load("lingering_selection").program, {}, limits(2, 4))
            .verdict == Verdict::kHolds);
  CHECK(check_amend_complete(end_program(), {}).verdict == Verdict::kHolds);
  CHECK(check_amend_complete(testing::load("delayed_conditional").program, {}, limits(1))
            .verdict == Verdict::kHolds);
}

TEST_CASE("soundness of amendment") {
  CHECK(check_amend_sound(testing::load("lingering_selection_amended").program, {},
                          limits(2, 4))
            .verdict == Verdict::kHolds);
  CHECK(check_amend_sound(end_program(), {}).verdict == Verdict::kHolds);
  auto bs = testing::load("buyer_seller");
  CHECK(check_amend_sound(bs.program, bs.state, limits(4)).verdict == Verdict::kHolds);
}

TEST_CASE("the step-by-step formulation fails only when a conditional is overtaken") {
  auto delayed = testing::load("delayed_conditional").program;
  auto report = check_intermediate_formulation(delayed, {}, limits(6));
  CHECK(report.verdict == Verdict::kCounterexample);
  REQUIRE(report.witness);
  check_replays(delayed, *report.witness);
  CHECK(report.witness->trace == Trace{TLCom{q, 0, r}});
  CHECK(check_intermediate_formulation(delayed, {}, limits(1)).verdict ==
        Verdict::kCounterexample);
  CHECK(check_intermediate_formulation(testing::load("parallel_orders").program, {},
                                       limits(6))
            .verdict == Verdict::kHolds);
  CHECK(check_intermediate_formulation(testing::load("lingering_selection").program, {},
                                       limits(6))
            .verdict == Verdict::kHolds);
}

TEST_CASE("choreographies and their projections have the same traces") {
  auto bs = testing::load("buyer_seller");
  CHECK(check_epp_correspondence(bs.program, bs.state, limits(5)).verdict ==
        Verdict::kHolds);
  CHECK(check_epp_correspondence(end_program(), {}, limits(5)).verdict == Verdict::kHolds);
  CHECK(check_epp_correspondence(testing::load("lingering_selection_amended").program, {},
                                 limits(5))
            .verdict == Verdict::kHolds);
  CHECK_THROWS_AS(check_epp_correspondence(testing::load("lingering_selection").program,
                                           {}, limits(5)),
                  std::invalid_argument);
}

TEST_CASE("function implementation") {
  FnTable successor = table(1, {{{0}, 1}, {{1}, 2}, {{2}, 3}, {{3}, 4}});
  auto succ_prog = testing::load("successor").program;
  CHECK(check_implements(succ_prog, successor, {p}, q, 10).verdict == Verdict::kHolds);

  FnTable wrong = table(1, {{{0}, 1}, {{1}, 5}});
  auto bad = check_implements(succ_prog, wrong, {p}, q, 10);
  CHECK(bad.verdict == Verdict::kCounterexample);
  REQUIRE(bad.witness);
  check_replays(succ_prog, *bad.witness);
  CHECK(bad.witness->state.get(q, Var("x")) == 2);

  FnTable equal;
  equal.arity = 2;
  for (Value a = 0; a <= 2; ++a) {
    for (Value b = 0; b <= 2; ++b) equal.entries.emplace(std::vector<Value>{a, b}, a == b);
  }
  CHECK(check_implements(testing::load("equality").program, equal, {p, q}, r, 20).verdict ==
        Verdict::kHolds);

  auto loop = testing::load("loop").program;
  FnTable nowhere = table(1, {{{0}, std::nullopt}, {{1}, std::nullopt}});
  CHECK(check_implements(loop, nowhere, {p}, q, 50).verdict == Verdict::kHolds);
  // A defined entry whose runs loop is inconclusive, never a proof of divergence.
  CHECK(check_implements(loop, table(1, {{{0}, 0}}), {p}, q, 50).verdict ==
        Verdict::kResourceExhausted);
  // Terminating where the function is undefined is a counterexample.
  CHECK(check_implements(succ_prog, table(1, {{{0}, std::nullopt}}), {p}, q, 10).verdict ==
        Verdict::kCounterexample);
}

TEST_CASE("network implementation") {
  auto amended = amend_program(testing::load("equality").program);
  auto net = epp(amended);
  REQUIRE(net.ok());
  FnTable equal;
  equal.arity = 2;
  for (Value a = 0; a <= 2; ++a) {
    for (Value b = 0; b <= 2; ++b) equal.entries.emplace(std::vector<Value>{a, b}, a == b);
  }
  CHECK(check_implements(*net.program, equal, {p, q}, r, 20).verdict == Verdict::kHolds);

  FnTable flipped = equal;
  flipped.entries[{1, 1}] = 0;
  auto bad = check_implements(*net.program, flipped, {p, q}, r, 20);
  CHECK(bad.verdict == Verdict::kCounterexample);
  REQUIRE(bad.witness);
  check_replays(amended, *bad.witness);
}

TEST_CASE("a small state budget makes the result inconclusive") {
  Limits tight = limits(6);
  tight.state_budget = 2;
  auto prog = testing::load("parallel_orders").program;
  CHECK(check_amend_complete(prog, {}, tight).verdict == Verdict::kResourceExhausted);
  CHECK(check_naive_correspondence(prog, {}, tight).verdict == Verdict::kResourceExhausted);
}

TEST_CASE("reports render as text and JSON") {
  auto prog = testing::load("lingering_selection").program;
  auto report = check_naive_correspondence(prog, {}, limits(2));
  auto text = format_text(report);
  CHECK(text.find("naive: counterexample") == 0);
  CHECK(text.find("trace: [tau(r)]") != std::string::npos);

  auto doc = nlohmann::json::parse(format_json({report}));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["verdict"] == "counterexample");
  CHECK(doc[0]["witness"]["trace"] == nlohmann::json::array({"tau(r)"}));
  CHECK(doc[0]["stats"]["explored"].get<std::size_t>() == report.stats.explored);
}

TEST_CASE("corpus counterexamples replay and persist at larger depths") {
  for (const auto& entry : testing::hand_written()) {
    CAPTURE(entry.name);
    for (std::size_t d = 1; d <= 4; ++d) {
      for (auto check : {check_naive_correspondence, check_intermediate_formulation}) {
        auto report = check(entry.program, entry.state, limits(d));
        if (report.verdict != Verdict::kCounterexample) continue;
        REQUIRE(report.witness);
        check_replays(entry.program, *report.witness);
        CHECK(check(entry.program, entry.state, limits(d + 1)).verdict ==
              Verdict::kCounterexample);
      }
    }
  }
}
