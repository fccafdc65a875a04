// Copyright 2026 The qloop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qloop/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "qloop/error.hpp"
#include "qloop/examples.hpp"
#include "qloop/inspect.hpp"
#include "qloop/process.hpp"
#include "qloop/serialize.hpp"

namespace qloop::cli {

namespace {

std::string percent(std::uint64_t count, std::uint64_t total) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * static_cast<double>(count) /
                                               static_cast<double>(total));
  return buf;
}

std::string qubit_list(const std::vector<QubitIndex> &qubits) {
  std::string out = "[";
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (i) out += ' ';
    out += "q" + std::to_string(qubits[i]);
  }
  return out + "]";
}

std::vector<const Measure *> measures_of(const QuantumCode &code) {
  std::vector<const Measure *> out(code.num_futures, nullptr);
  for (const Instruction &inst : code.instructions) {
    if (const auto *m = std::get_if<Measure>(&inst.op)) out[m->future] = m;
  }
  return out;
}

std::string render_human(const QuantumCode &code, const std::vector<ExecutionResult> &shots,
                         const RunConfig &config) {
  const inspect::FormatSpec spec = inspect::parse_format(config.format.value_or(""));
  std::vector<std::string> sections;

  if (!shots.empty()) {
    for (const auto &[id, data] : shots.front().dumps) {
      sections.push_back("dump " + std::to_string(id) + " " + qubit_list(data.qubits) + "\n" +
                         inspect::show(data, spec));
    }
  }

  const auto measures = measures_of(code);
  const std::string over = " over " + std::to_string(shots.size()) + " shot" +
                           (shots.size() == 1 ? "" : "s");
  for (FutureId f = 0; f < code.num_futures; ++f) {
    std::map<std::uint64_t, std::uint64_t> histogram;
    for (const ExecutionResult &r : shots) ++histogram[r.futures.at(f)];
    std::string text = "future " + std::to_string(f) + " " + qubit_list(measures[f]->qubits) + over;
    for (const auto &[outcome, count] : histogram) {
      text += "\n" + std::to_string(outcome) + ": " + std::to_string(count) + " (" +
              percent(count, shots.size()) + ")";
    }
    sections.push_back(std::move(text));
  }

  if (code.num_futures > 1) {
    std::map<std::vector<std::uint64_t>, std::uint64_t> joint;
    for (const ExecutionResult &r : shots) {
      std::vector<std::uint64_t> key;
      for (const auto &[id, value] : r.futures) key.push_back(value);
      ++joint[key];
    }
    std::string text = "joint [";
    for (FutureId f = 0; f < code.num_futures; ++f) text += (f ? " f" : "f") + std::to_string(f);
    text += "]" + over;
    for (const auto &[key, count] : joint) {
      text += "\n";
      for (std::size_t i = 0; i < key.size(); ++i) text += (i ? " " : "") + std::to_string(key[i]);
      text += ": " + std::to_string(count) + " (" + percent(count, shots.size()) + ")";
    }
    sections.push_back(std::move(text));
  }

  if (sections.empty()) return "no dumps or futures\n";
  std::string out;
  for (std::size_t i = 0; i < sections.size(); ++i) {
    if (i) out += "\n";
    out += sections[i] + "\n";
  }
  return out;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw std::runtime_error("cannot write '" + path + "'");
}

const Example &require_example(const std::string &name) {
  const Example *example = find_example(name);
  if (!example) {
    throw BadArgument("unknown example '" + name + "' (see `qloop examples`)");
  }
  return *example;
}

// Builds the example afresh for every shot, seeds seed, seed+1, ...
std::vector<ExecutionResult> run_example(const Example &example, const RunConfig &config,
                                         QuantumCode &code_out) {
  std::vector<ExecutionResult> shots;
  shots.reserve(config.shots);
  for (std::uint64_t i = 0; i < config.shots; ++i) {
    Process p(ProcessOptions{config.seed + i, {}, false});
    example.build(p);
    shots.push_back(p.execute());
    if (i == 0) code_out = p.code();
  }
  return shots;
}

std::vector<ExecutionResult> run_code(const QuantumCode &code, const RunConfig &config) {
  std::vector<ExecutionResult> shots;
  shots.reserve(config.shots);
  for (std::uint64_t i = 0; i < config.shots; ++i) {
    shots.push_back(execute(code, config.seed + i));
  }
  return shots;
}

}  // namespace

std::string result_to_json(const ExecutionResult &result) {
  nlohmann::json futures = nlohmann::json::object();
  for (const auto &[id, value] : result.futures) futures[std::to_string(id)] = value;
  nlohmann::json dumps = nlohmann::json::object();
  for (const auto &[id, data] : result.dumps) {
    nlohmann::json states = nlohmann::json::array();
    for (const BasisAmplitude &entry : data.basis_states) {
      states.push_back({{"basis", entry.basis},
                        {"re", entry.amplitude.real()},
                        {"im", entry.amplitude.imag()}});
    }
    dumps[std::to_string(id)] = {{"qubits", data.qubits}, {"states", states}};
  }
  return nlohmann::json{{"futures", futures}, {"dumps", dumps}}.dump();
}

std::string render(const QuantumCode &code, const std::vector<ExecutionResult> &shots,
                   const RunConfig &config) {
  if (config.output == OutputMode::Json) {
    std::string out;
    for (const ExecutionResult &r : shots) out += result_to_json(r) + "\n";
    return out;
  }
  return render_human(code, shots, config);
}

int run_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"qloop: build quantum programs, run them on a state-vector simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format;
  std::string out_path;
  app.add_option("--seed", config.seed, "seed of the first shot (shot i uses seed + i)");
  app.add_option("--shots", config.shots, "number of executions")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "ket layout for dumps, e.g. b2 or i1:i1");
  app.add_option("--output", config.output, "human or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputMode>{{"human", OutputMode::Human},
                                            {"json", OutputMode::Json}}))
      ->option_text("human|json");
  app.add_option("--out", out_path, "file for emit-ir / bloch SVG output");

  auto *run = app.add_subcommand("run", "run a bundled example");
  run->add_option("example", config.target, "example name")->required();
  auto *run_ir = app.add_subcommand("run-ir", "run a program from an IR file");
  run_ir->add_option("file", config.target, "IR JSON file")->required();
  auto *emit_ir = app.add_subcommand("emit-ir", "write an example's IR as JSON");
  emit_ir->add_option("example", config.target, "example name")->required();
  auto *bloch = app.add_subcommand("bloch", "Bloch coordinates of an example's first dump");
  bloch->add_option("example", config.target, "example name")->required();
  auto *list = app.add_subcommand("examples", "list bundled examples");

  std::vector<const char *> argv{"qloop"};
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  if (app.count("--format")) config.format = format;

  try {
    if (list->parsed()) {
      for (const Example &e : examples()) out << e.name << "\t" << e.description << "\n";
    } else if (run->parsed()) {
      QuantumCode code;
      const auto shots = run_example(require_example(config.target), config, code);
      out << render(code, shots, config);
    } else if (run_ir->parsed()) {
      const QuantumCode code = deserialize(read_file(config.target));
      out << render(code, run_code(code, config), config);
    } else if (emit_ir->parsed()) {
      Process p(ProcessOptions{config.seed, {}, false});
      require_example(config.target).build(p);
      write_output(out_path, serialize(p.code(), 2) + "\n", out);
    } else if (bloch->parsed()) {
      Process p(ProcessOptions{config.seed, {}, false});
      require_example(config.target).build(p);
      const auto &dumps = p.execute().dumps;
      if (dumps.empty()) throw WrongArity("example '" + config.target + "' has no dump");
      const inspect::BlochCoords coords = inspect::bloch_coords(dumps.begin()->second);
      out << inspect::format_bloch(coords) << "\n";
      if (!out_path.empty()) write_output(out_path, inspect::bloch_svg(coords), out);
    }
  } catch (const EngineFailure &e) {
    err << "error: " << e.what() << "\n";
    return kExitEngine;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace qloop::cli
