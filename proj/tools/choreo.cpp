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

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "choreo/amendment.hpp"
#include "choreo/cc_semantics.hpp"
#include "choreo/projection.hpp"
#include "choreo/report.hpp"
#include "choreo/syntax.hpp"
#include "choreo/verifier.hpp"

namespace {

using namespace choreo;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kExhausted = 3;

struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void print_diagnostics(const std::string& path,
                       const std::vector<syntax::Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    std::cerr << path << ":" << syntax::to_string(d) << "\n";
  }
}

cc::Program load_program(const std::string& path) {
  auto parsed = syntax::parse_source(read_file(path));
  if (!parsed.ok()) {
    print_diagnostics(path, parsed.diagnostics);
    throw UsageError{"parse failed"};
  }
  return parsed.unit->to_program();
}

State load_state(const std::string& path) {
  if (path.empty()) return {};
  auto parsed = syntax::parse_state(read_file(path));
  if (!parsed.ok()) {
    print_diagnostics(path, parsed.diagnostics);
    throw UsageError{"invalid state file"};
  }
  return *parsed.value;
}

verify::FnTable load_table(const std::string& path) {
  auto parsed = syntax::parse_table(read_file(path));
  if (!parsed.ok()) {
    print_diagnostics(path, parsed.diagnostics);
    throw UsageError{"invalid table file"};
  }
  return *parsed.value;
}

std::vector<Pid> split_pids(const std::string& text) {
  std::vector<Pid> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

// Reports ill-formedness on stderr; true when the program may be used.
bool require_wf(const cc::Program& p) {
  if (cc::program_wf(p)) return true;
  std::cerr << "error: program is not well-formed (self-communication, "
               "undefined procedure or undeclared process)\n";
  return false;
}

void print_failures(const std::vector<ProjectionFailure>& failures) {
  for (const auto& f : failures) {
    std::string term = syntax::render(f.term);
    auto nl = term.find('\n');
    std::cerr << "unprojectable: in " << f.context << ", the conditional '"
              << term.substr(0, nl == std::string::npos ? nl : nl - 2)
              << " ...' on process " << f.process
              << "\n";
  }
}

int exit_code(verify::Verdict v) {
  switch (v) {
    case verify::Verdict::kHolds:
      return kOk;
    case verify::Verdict::kCounterexample:
      return kFailed;
    case verify::Verdict::kResourceExhausted:
      return kExhausted;
  }
  return kFailed;
}

int cmd_check(const std::string& file) {
  auto program = load_program(file);
  if (!require_wf(program)) return kFailed;
  auto result = epp(program);
  if (!result.ok()) {
    print_failures(result.failures);
    return kFailed;
  }
  std::cout << "ok: well-formed and projectable on";
  for (const auto& p : cc::pn(program)) std::cout << ' ' << p;
  std::cout << "\n";
  return kOk;
}

int cmd_project(const std::string& file, const std::string& process) {
  auto program = load_program(file);
  if (!require_wf(program)) return kFailed;
  auto result = epp(program);
  if (!result.ok()) {
    print_failures(result.failures);
    return kFailed;
  }
  if (process.empty()) {
    std::cout << syntax::render(*result.program);
    return kOk;
  }
  Pid p(process);
  std::cout << syntax::render(result.program->network.at(p)) << "\n";
  return kOk;
}

int cmd_amend(const std::string& file, const std::string& out) {
  auto program = load_program(file);
  if (!require_wf(program)) return kFailed;
  std::string text = syntax::render(amend_program(program));
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!(os << text)) throw UsageError{"cannot write " + out};
  }
  return kOk;
}

void print_run(const cc::Run& run) {
  std::cout << "trace: " << to_string(run.trace) << "\n";
  std::cout << syntax::render(run.chor) << "\n";
  std::string state = syntax::render(run.state);
  std::cout << (state.empty() ? "(all variables 0)\n" : state);
}

int cmd_run(const std::string& file, const std::string& state_file, bool all,
            std::optional<std::uint64_t> seed, std::size_t steps) {
  auto program = load_program(file);
  if (!require_wf(program)) return kFailed;
  State s = load_state(state_file);
  if (all) {
    std::size_t count = 0;
    for (const auto& run :
         cc::traces(program.procedures, program.main, s, steps)) {
      bool maximal =
          cc::successors(program.procedures, run.chor, run.state).empty();
      if (!maximal && run.trace.size() < steps) continue;
      if (count++ > 0) std::cout << "\n";
      std::cout << (maximal ? "# maximal run\n" : "# step limit reached\n");
      print_run(run);
    }
    return kOk;
  }
  std::mt19937_64 rng(seed.value_or(0));
  cc::Run run{{}, program.main, s};
  while (run.trace.size() < steps) {
    auto next = cc::successors(program.procedures, run.chor, run.state);
    if (next.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
    const auto& step = next[pick(rng)];
    run.trace.push_back(step.label);
    run.chor = step.next;
    run.state = step.state;
  }
  print_run(run);
  return kOk;
}

int cmd_verify(const std::string& kind, const std::string& file,
               const std::string& state_file, const verify::Limits& limits,
               bool json) {
  auto program = load_program(file);
  if (!require_wf(program)) return kFailed;
  State s = load_state(state_file);
  verify::Report report;
  if (kind == "naive") {
    report = verify::check_naive_correspondence(program, s, limits);
  } else if (kind == "amend-complete") {
    report = verify::check_amend_complete(program, s, limits);
  } else if (kind == "amend-sound") {
    report = verify::check_amend_sound(program, s, limits);
  } else if (kind == "intermediate") {
    report = verify::check_intermediate_formulation(program, s, limits);
  } else {
    auto result = epp(program);
    if (!result.ok()) {
      print_failures(result.failures);
      return kFailed;
    }
    report = verify::check_epp_correspondence(program, s, limits);
  }
  std::cout << (json ? verify::format_json({report})
                     : verify::format_text(report));
  return exit_code(report.verdict);
}

int cmd_implements(const std::string& file, const std::string& table_file,
                   const std::string& inputs, const std::string& output,
                   std::size_t bound, bool amended, bool network, bool json) {
  auto program = load_program(file);
  if (!require_wf(program)) return kFailed;
  auto table = load_table(table_file);
  auto in = split_pids(inputs);
  if (in.size() != table.arity) {
    throw UsageError{"--inputs names " + std::to_string(in.size()) +
                     " processes but the table has arity " +
                     std::to_string(table.arity)};
  }
  if (amended) program = amend_program(program);
  verify::Report report;
  if (network) {
    auto result = epp(program);
    if (!result.ok()) {
      print_failures(result.failures);
      return kFailed;
    }
    report =
        verify::check_implements(*result.program, table, in, Pid(output), bound);
  } else {
    report = verify::check_implements(program, table, in, Pid(output), bound);
  }
  std::cout << (json ? verify::format_json({report})
                     : verify::format_text(report));
  return exit_code(report.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Choreographic programming toolkit"};
  app.require_subcommand(1);

  std::string file;
  std::string state_file;
  bool json = false;

  auto* check = app.add_subcommand(
      "check", "Check well-formedness and projectability");
  check->add_option("FILE", file, "Choreography source")->required();

  std::string process;
  auto* project =
      app.add_subcommand("project", "Print the endpoint projection");
  project->add_option("FILE", file, "Choreography source")->required();
  project->add_option("--process", process, "Only this process");

  std::string out;
  auto* amend = app.add_subcommand("amend", "Insert missing selections");
  amend->add_option("FILE", file, "Choreography source")->required();
  amend->add_option("-o,--output", out, "Write the result here");

  bool all = false;
  std::optional<std::uint64_t> seed;
  std::size_t steps = 100;
  auto* run = app.add_subcommand("run", "Execute a choreography");
  run->add_option("FILE", file, "Choreography source")->required();
  run->add_option("--state", state_file, "Initial state file");
  auto* all_flag = run->add_flag("--all", all, "Print every run");
  auto* seed_opt = run->add_option("--seed", seed, "Follow one random run");
  all_flag->excludes(seed_opt);
  run->add_option("--steps", steps, "Maximum number of steps")
      ->capture_default_str();

  std::string kind;
  verify::Limits limits;
  auto* verify_cmd =
      app.add_subcommand("verify", "Bounded check of a correspondence");
  verify_cmd->add_option("KIND", kind, "Which check")
      ->required()
      ->check(CLI::IsMember(
          {"naive", "amend-complete", "amend-sound", "intermediate", "epp"}));
  verify_cmd->add_option("FILE", file, "Choreography source")->required();
  verify_cmd->add_option("--state", state_file, "Initial state file");
  verify_cmd->add_option("--depth", limits.depth, "Trace length")
      ->capture_default_str();
  verify_cmd->add_option("--bound", limits.search_bound, "Extension steps")
      ->capture_default_str();
  verify_cmd
      ->add_option("--budget", limits.state_budget,
                   "Configurations explored per check")
      ->capture_default_str();
  verify_cmd->add_flag("--json", json, "Machine-readable output");

  std::string table_file;
  std::string inputs;
  std::string output;
  std::size_t bound = 50;
  bool amended = false;
  bool network = false;
  auto* implements = app.add_subcommand(
      "implements", "Bounded check against a function table");
  implements->add_option("FILE", file, "Choreography source")->required();
  implements->add_option("--table", table_file, "Function table")->required();
  implements->add_option("--inputs", inputs, "Input processes, p1,p2,...")
      ->required();
  implements->add_option("--output", output, "Output process")->required();
  implements->add_option("--bound", bound, "Steps per execution")
      ->capture_default_str();
  implements->add_flag("--amend", amended, "Check the amended program");
  implements->add_flag("--epp", network, "Check the projected network");
  implements->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(file);
    if (*project) return cmd_project(file, process);
    if (*amend) return cmd_amend(file, out);
    if (*run) {
      if (!all && !seed) throw UsageError{"run needs --all or --seed"};
      return cmd_run(file, state_file, all, seed, steps);
    }
    if (*verify_cmd) return cmd_verify(kind, file, state_file, limits, json);
    if (*implements) {
      return cmd_implements(file, table_file, inputs, output, bound, amended,
                            network, json);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
