#pragma once

#include <string>

#include "weldlab/schema_io.hpp"

#ifndef WELDLAB_FIXTURE_DIR
#define WELDLAB_FIXTURE_DIR "fixtures"
#endif

inline weldlab::MatingSchema fixture(const std::string& name) {
  return weldlab::load_schema(std::string(WELDLAB_FIXTURE_DIR) + "/" + name + ".json");
}
