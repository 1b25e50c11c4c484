#include "weldlab/schema_io.hpp"

#include <fstream>

#include "weldlab/error.hpp"

namespace weldlab {

using nlohmann::json;

namespace {

int require_int(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    throw Error(ErrorCode::SchemaError, where + ": missing integer field '" + key + "'");
  }
  return obj[key].get<int>();
}

std::pair<int, int> read_pair(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
    throw Error(ErrorCode::SchemaError, where + ": expected [slot, index]");
  }
  return {v[0].get<int>(), v[1].get<int>()};
}

Slot parse_slot(const json& s, std::size_t index) {
  const std::string where = "slots[" + std::to_string(index) + "]";
  if (!s.is_object()) throw Error(ErrorCode::SchemaError, where + ": expected an object");
  const std::string kind = s.value("kind", "");
  Placement placement = Placement::Bounded;
  const std::string pl = s.value("placement", "bounded");
  if (pl == "unbounded") {
    placement = Placement::Unbounded;
  } else if (pl != "bounded") {
    throw Error(ErrorCode::SchemaError, where + ": unknown placement '" + pl + "'");
  }
  if (kind == "group") {
    PairingCase c = PairingCase::CaseI;
    try {
      c = parse_case(s.value("case", "I"));
    } catch (const Error& e) {
      throw Error(ErrorCode::SchemaError, where + ": " + e.what());
    }
    return Slot::group(require_int(s, "n", where), require_int(s, "p", where), c, placement);
  }
  if (kind == "blaschke") return Slot::blaschke(require_int(s, "degree", where), placement);
  throw Error(ErrorCode::SchemaError, where + ": unknown kind '" + kind + "'");
}

}  // namespace

MatingSchema parse_schema(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "schema must be a JSON object");
  if (doc.contains("schema_version") && doc["schema_version"] != kSchemaVersion) {
    throw Error(ErrorCode::SchemaError, "unsupported schema_version");
  }
  MatingSchema schema;
  schema.name = doc.value("name", "");
  if (!doc.contains("slots") || !doc["slots"].is_array()) {
    throw Error(ErrorCode::SchemaError, "missing 'slots' array");
  }
  for (std::size_t i = 0; i < doc["slots"].size(); ++i) {
    schema.slots.push_back(parse_slot(doc["slots"][i], i));
  }
  if (doc.contains("identifications")) {
    const json& ids = doc["identifications"];
    if (!ids.is_array()) throw Error(ErrorCode::SchemaError, "'identifications' must be an array");
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const std::string where = "identifications[" + std::to_string(i) + "]";
      if (!ids[i].is_object() || !ids[i].contains("corners") || !ids[i]["corners"].is_array()) {
        throw Error(ErrorCode::SchemaError, where + ": expected {\"corners\": [...]}");
      }
      std::vector<CornerRef> cls;
      for (const json& c : ids[i]["corners"]) {
        const auto [slot, corner] = read_pair(c, where);
        cls.push_back({slot, corner});
      }
      schema.contact.classes.push_back(std::move(cls));
    }
  }
  if (doc.contains("enclosures")) {
    const json& enc = doc["enclosures"];
    if (!enc.is_array()) throw Error(ErrorCode::SchemaError, "'enclosures' must be an array");
    for (const json& e : enc) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::SchemaError, "enclosure must be a pair of [slot, side]");
      }
      const auto [s1, k1] = read_pair(e[0], "enclosures");
      const auto [s2, k2] = read_pair(e[1], "enclosures");
      schema.contact.enclosures.push_back({SideRef{s1, k1}, SideRef{s2, k2}});
    }
  }
  if (doc.contains("polynomial")) {
    if (!doc["polynomial"].is_string()) throw Error(ErrorCode::SchemaError, "'polynomial' must be a string");
    schema.polynomial = doc["polynomial"].get<std::string>();
  }
  return schema;
}

MatingSchema load_schema(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::UsageError, "cannot open schema file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, path + ": " + e.what());
  }
  return parse_schema(doc);
}

json schema_to_json(const MatingSchema& schema) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["name"] = schema.name;
  json slots = json::array();
  for (const Slot& s : schema.slots) {
    json j;
    if (s.kind == SlotKind::Group) {
      j["kind"] = "group";
      j["n"] = s.n;
      j["p"] = s.p;
      j["case"] = to_string(s.pairing);
    } else {
      j["kind"] = "blaschke";
      j["degree"] = s.degree;
    }
    j["placement"] = s.placement == Placement::Unbounded ? "unbounded" : "bounded";
    slots.push_back(j);
  }
  doc["slots"] = slots;
  json ids = json::array();
  for (const auto& cls : schema.contact.classes) {
    json corners = json::array();
    for (const CornerRef& c : cls) corners.push_back({c.slot, c.corner});
    ids.push_back({{"corners", corners}});
  }
  doc["identifications"] = ids;
  if (!schema.contact.enclosures.empty()) {
    json enc = json::array();
    for (const auto& [a, b] : schema.contact.enclosures) {
      enc.push_back({{a.slot, a.side}, {b.slot, b.side}});
    }
    doc["enclosures"] = enc;
  }
  if (schema.polynomial) doc["polynomial"] = *schema.polynomial;
  return doc;
}

}  // namespace weldlab
