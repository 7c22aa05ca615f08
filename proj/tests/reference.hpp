#pragma once

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace testref {

// Transcribed tables, read straight from the data directory.
inline const nlohmann::json& reference() {
  static const nlohmann::json j = [] {
    std::ifstream in(NILMETRIQ_REFERENCE_PATH);
    if (!in) throw std::runtime_error("missing reference tables at " NILMETRIQ_REFERENCE_PATH);
    return nlohmann::json::parse(in);
  }();
  return j;
}

}  // namespace testref
