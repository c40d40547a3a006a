#pragma once

#include <string>
#include <utility>

#include "eschenburg/classifier.hpp"

namespace eschenburg {

struct RunConfig {
  i64 rmax = 0;
  int shards = 1;
  std::string outdir;  // empty: nothing is written
  bool resume = false;
  bool emit_csv = false;
  bool emit_json = false;
  Level level = Level::Homeomorphism;
  int threads = 0;  // 0: min(shards, hardware threads)
};

struct RunLog {
  int shards_computed = 0;
  int shards_resumed = 0;
};

/// Shard i covers rmax*i/shards < r <= rmax*(i+1)/shards.
std::pair<i64, i64> shard_range(i64 rmax, int shards, int index);

/// Enumerates, classifies and merges all shards. The report does not depend on
/// the shard or thread count. With an output directory, shard CSVs go to
/// shard-NNNN.csv with checksums in manifest.json and the report to report.json.
ClassificationReport run_search(const RunConfig& config, RunLog* log = nullptr);

}  // namespace eschenburg
