#include "matineq/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace matineq {

namespace {

Json provenance_to_json(const Provenance& p) {
  Json j{{"kind", std::string(to_string(p.kind))}};
  if (p.kind == Provenance::Kind::Generated) {
    j["dim"] = p.dim;
    j["seed"] = p.seed;
  }
  if (!p.path.empty()) j["path"] = p.path;
  return j;
}

Provenance provenance_from_json(const Json& j) {
  Provenance p;
  if (!j.is_object()) return p;
  const std::string kind = j.value("kind", "literal");
  if (kind == "generated") {
    p.kind = Provenance::Kind::Generated;
  } else if (kind == "file") {
    p.kind = Provenance::Kind::File;
  }
  p.dim = j.value("dim", 0);
  p.seed = j.value("seed", std::uint64_t{0});
  p.path = j.value("path", "");
  return p;
}

const Json& object_or_empty(const Json& j, const char* key) {
  static const Json empty = Json::object();
  if (!j.contains(key)) return empty;
  if (!j[key].is_object()) throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be an object");
  return j[key];
}

bool is_generated_reference(const Json& j) {
  return j.contains("provenance") && j["provenance"].is_string() && j["provenance"] == "generated";
}

}  // namespace

Json instance_to_json(const LawInstance& inst) {
  Json j;
  j["law"] = inst.law;
  j["provenance"] = provenance_to_json(inst.provenance);
  j["matrices"] = Json::object();
  for (const auto& [role, m] : inst.matrices) {
    j["matrices"][role] = m.rows() == m.cols() ? matrix_to_json(m) : frame_to_json(m);
  }
  j["vectors"] = Json::object();
  for (const auto& [role, v] : inst.vectors) j["vectors"][role] = cvec_to_json(v);
  j["sequences"] = Json::object();
  for (const auto& [role, s] : inst.sequences) j["sequences"][role] = rvec_to_json(s);
  j["scalars"] = Json::object();
  for (const auto& [role, x] : inst.scalars) j["scalars"][role] = number_to_json(x);
  return j;
}

namespace {

LawInstance parse_instance(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "instance must be an object");
  if (j.contains("worst_instance")) {
    if (j["worst_instance"].is_null()) throw Error(ErrorCode::ParseError, "report has no worst instance");
    return parse_instance(j["worst_instance"]);
  }
  if (j.contains("instance")) return parse_instance(j["instance"]);
  if (!j.contains("law") || !j["law"].is_string()) throw Error(ErrorCode::ParseError, "missing \"law\"");
  const std::string law = j["law"].get<std::string>();
  const LawDefinition& def = find_law(law);

  if (is_generated_reference(j)) {
    if (!j.contains("dim") || !j["dim"].is_number_integer() || !j.contains("seed") ||
        !j["seed"].is_number_integer() || (!j["seed"].is_number_unsigned() && j["seed"].get<long long>() < 0)) {
      throw Error(ErrorCode::ParseError, "generated reference needs integer \"dim\" and \"seed\"");
    }
    return random_instance(def, j["dim"].get<int>(), j["seed"].get<std::uint64_t>());
  }

  LawInstance inst;
  inst.law = law;
  if (j.contains("provenance")) inst.provenance = provenance_from_json(j["provenance"]);
  for (const auto& [role, m] : object_or_empty(j, "matrices").items()) {
    inst.matrices[role] = m.contains("rows") ? frame_from_json(m) : matrix_from_json(m);
  }
  for (const auto& [role, v] : object_or_empty(j, "vectors").items()) inst.vectors[role] = cvec_from_json(v);
  for (const auto& [role, s] : object_or_empty(j, "sequences").items()) inst.sequences[role] = rvec_from_json(s);
  for (const auto& [role, x] : object_or_empty(j, "scalars").items()) {
    if (!x.is_number() && !x.is_string()) throw Error(ErrorCode::ParseError, "scalar " + role + " is not a number");
    inst.scalars[role] = number_from_json(x);
  }
  validate_shape(def, inst);
  return inst;
}

}  // namespace

LawInstance instance_from_json(const Json& j) {
  try {
    return parse_instance(j);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_json_file(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::BadConfig, "cannot write " + path);
  out << j.dump(2) << '\n';
}

void save_instance(const LawInstance& inst, const std::string& path) {
  write_json_file(instance_to_json(inst), path);
}

LawInstance load_instance(const std::string& path) {
  const Json j = read_json_file(path);
  LawInstance inst = instance_from_json(j);
  if (inst.provenance.kind == Provenance::Kind::Literal) {
    inst.provenance.kind = Provenance::Kind::File;
    inst.provenance.path = path;
  }
  return inst;
}

}  // namespace matineq
