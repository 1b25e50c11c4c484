#pragma once

#include <string>

#include "json.hpp"
#include "weldlab/mating_schema.hpp"

namespace weldlab {

inline constexpr int kSchemaVersion = 1;

MatingSchema parse_schema(const nlohmann::json& doc);
MatingSchema load_schema(const std::string& path);
nlohmann::json schema_to_json(const MatingSchema& schema);

}  // namespace weldlab
