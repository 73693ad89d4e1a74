#pragma once

#include <string>

#include "quadrank/json_io.hpp"

inline std::string fixture_path(const std::string& name) {
  return std::string(QUADRANK_FIXTURE_DIR) + "/" + name + ".json";
}

inline quadrank::QuadraticSurface fixture(const std::string& name) {
  return quadrank::read_surface_file(fixture_path(name));
}
