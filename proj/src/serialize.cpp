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

#include "qloop/serialize.hpp"

#include <json.hpp>

#include "qloop/error.hpp"

namespace qloop {

using nlohmann::json;

namespace {

json to_json(const Instruction &inst);

json body_to_json(const std::vector<Instruction> &body) {
  json out = json::array();
  for (const Instruction &inst : body) out.push_back(to_json(inst));
  return out;
}

struct Encoder {
  json operator()(const Alloc &op) const {
    return {{"op", "alloc"}, {"count", op.count}};
  }
  json operator()(const GateApp &op) const {
    json out = {{"op", "gate"}, {"kind", gate_name(op.gate.kind)}};
    if (is_parametric(op.gate.kind)) out["angle"] = op.gate.angle;
    out["target"] = op.target;
    out["controls"] = op.controls;
    return out;
  }
  json operator()(const Measure &op) const {
    return {{"op", "measure"}, {"qubits", op.qubits}, {"future", op.future}};
  }
  json operator()(const Dump &op) const {
    return {{"op", "dump"}, {"qubits", op.qubits}, {"dump", op.dump}};
  }
  json operator()(const Branch &op) const {
    return {{"op", "branch"},
            {"future", op.condition.future},
            {"equals", op.condition.literal},
            {"body", body_to_json(op.body)}};
  }
};

json to_json(const Instruction &inst) { return std::visit(Encoder{}, inst.op); }

[[noreturn]] void malformed(const std::string &what) { throw MalformedCode(what); }

const json &field(const json &obj, const char *name) {
  auto it = obj.find(name);
  if (it == obj.end()) malformed(std::string("missing field '") + name + "'");
  return *it;
}

template <typename T>
T unsigned_field(const json &obj, const char *name) {
  const json &v = field(obj, name);
  if (!v.is_number_unsigned()) {
    malformed(std::string("field '") + name + "' must be a non-negative integer");
  }
  auto raw = v.get<std::uint64_t>();
  if (raw > std::numeric_limits<T>::max()) {
    malformed(std::string("field '") + name + "' is out of range");
  }
  return static_cast<T>(raw);
}

std::vector<QubitIndex> index_list(const json &obj, const char *name) {
  const json &v = field(obj, name);
  if (!v.is_array()) malformed(std::string("field '") + name + "' must be an array");
  std::vector<QubitIndex> out;
  out.reserve(v.size());
  for (const json &e : v) {
    if (!e.is_number_unsigned() ||
        e.get<std::uint64_t>() > std::numeric_limits<QubitIndex>::max()) {
      malformed(std::string("field '") + name + "' must hold qubit indices");
    }
    out.push_back(e.get<QubitIndex>());
  }
  return out;
}

Instruction from_json(const json &obj);

std::vector<Instruction> body_from_json(const json &arr) {
  if (!arr.is_array()) malformed("instruction list must be an array");
  std::vector<Instruction> out;
  out.reserve(arr.size());
  for (const json &e : arr) out.push_back(from_json(e));
  return out;
}

Instruction from_json(const json &obj) {
  if (!obj.is_object()) malformed("instruction must be an object");
  const json &op = field(obj, "op");
  if (!op.is_string()) malformed("field 'op' must be a string");
  const auto tag = op.get<std::string>();

  if (tag == "alloc") {
    return Alloc{unsigned_field<std::uint32_t>(obj, "count")};
  }
  if (tag == "gate") {
    const json &kind_field = field(obj, "kind");
    if (!kind_field.is_string()) malformed("field 'kind' must be a string");
    auto kind = gate_kind_from_name(kind_field.get<std::string>());
    if (!kind) malformed("unknown gate kind '" + kind_field.get<std::string>() + "'");
    GateApp app;
    app.gate.kind = *kind;
    auto angle = obj.find("angle");
    if (is_parametric(*kind)) {
      if (angle == obj.end() || !angle->is_number()) {
        malformed("gate '" + kind_field.get<std::string>() + "' needs a numeric angle");
      }
      app.gate.angle = angle->get<double>();
    } else if (angle != obj.end() && !angle->is_null()) {
      malformed("gate '" + kind_field.get<std::string>() + "' takes no angle");
    }
    app.target = unsigned_field<QubitIndex>(obj, "target");
    app.controls = obj.contains("controls") ? index_list(obj, "controls")
                                            : std::vector<QubitIndex>{};
    return app;
  }
  if (tag == "measure") {
    return Measure{index_list(obj, "qubits"), unsigned_field<FutureId>(obj, "future")};
  }
  if (tag == "dump") {
    return Dump{index_list(obj, "qubits"), unsigned_field<DumpId>(obj, "dump")};
  }
  if (tag == "branch") {
    Branch branch;
    branch.condition.future = unsigned_field<FutureId>(obj, "future");
    branch.condition.literal = unsigned_field<std::uint64_t>(obj, "equals");
    branch.body = body_from_json(field(obj, "body"));
    return branch;
  }
  malformed("unknown op '" + tag + "'");
}

}  // namespace

std::string serialize(const QuantumCode &code, int indent) {
  json doc = {
      {"version", kCodeFormatVersion},
      {"num_qubits", code.num_qubits},
      {"num_futures", code.num_futures},
      {"num_dumps", code.num_dumps},
      {"instructions", body_to_json(code.instructions)},
  };
  return doc.dump(indent);
}

QuantumCode deserialize(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("document must be a JSON object");
  const json &version = field(doc, "version");
  if (!version.is_number_integer() || version.get<long long>() != kCodeFormatVersion) {
    malformed("unsupported version " + version.dump());
  }

  QuantumCode code;
  code.num_qubits = unsigned_field<std::uint32_t>(doc, "num_qubits");
  code.num_futures = unsigned_field<std::uint32_t>(doc, "num_futures");
  code.num_dumps = unsigned_field<std::uint32_t>(doc, "num_dumps");
  code.instructions = body_from_json(field(doc, "instructions"));
  validate(code);
  return code;
}

}  // namespace qloop
