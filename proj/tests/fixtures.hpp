#pragma once

#include <string>

#include "iwtower/io.hpp"

#ifndef IWTOWER_FIXTURE_DIR
#error "IWTOWER_FIXTURE_DIR must point at tests/fixtures"
#endif

inline iwtower::GraphSpec fixture(const std::string& name) {
  return iwtower::load_graph_spec(std::string(IWTOWER_FIXTURE_DIR) + "/" + name + ".json");
}
