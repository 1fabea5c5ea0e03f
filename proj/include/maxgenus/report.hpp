#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "maxgenus/greedy.hpp"

namespace maxgenus {

inline constexpr int kReportSchemaVersion = 1;

/// Summary of one greedy run, emitted by `maxgenus greedy --json`.
struct RunReport {
  int schema_version = kReportSchemaVersion;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t beta = 0;
  std::size_t k = 0;
  GenusBounds bounds;
  std::string policy;
  std::uint64_t seed = 0;
  std::string backend;
  bool preprocess = false;
  GreedyCounters counters;
  double wall_time_ms = 0.0;
  PairSet pairs;

  struct EmbeddingSummary {
    std::size_t genus = 0;
    std::size_t faces = 0;
    friend bool operator==(const EmbeddingSummary&, const EmbeddingSummary&) = default;
  };
  std::optional<EmbeddingSummary> embedding;
};

bool operator==(const RunReport& a, const RunReport& b);

void to_json(nlohmann::json& j, const RunReport& r);
void from_json(const nlohmann::json& j, RunReport& r);

}  // namespace maxgenus
