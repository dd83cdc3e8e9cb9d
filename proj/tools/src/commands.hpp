#pragma once

#include "config.hpp"
#include "report.hpp"

namespace pwhcli {

struct Outcome {
  Json results = Json::array();
  Table table;         // the CSV view
  bool failed = false; // some check did not pass
};

// Throws pwh::DomainError / ConfigError on bad input and other pwh::Error on numeric failure.
Outcome run(const RunConfig& cfg);

}  // namespace pwhcli
