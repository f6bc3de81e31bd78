#ifndef DCM_BATCH_HPP
#define DCM_BATCH_HPP

#include <optional>

#include "dcm/analysis.hpp"

namespace dcm {

/// One problem to measure: a CSV path plus either an explicit class pair,
/// all-pairs expansion, or (default) the file's two classes as-is.
struct ManifestEntry {
  std::string name;  // defaults to the path stem
  std::string path;
  std::string label_column;
  std::optional<std::pair<std::string, std::string>> classes;
  bool all_pairs = false;
  std::optional<std::uint64_t> seed;  // absent -> derived from global seed + index
  std::string group;
  bool encode = false;
  bool zscore = false;
};

struct Manifest {
  std::vector<ManifestEntry> entries;
  std::uint64_t global_seed = 0;
  std::string output;  // optional default output directory
};

Manifest parse_manifest(const std::string& path);

struct BatchFailure {
  std::string name;
  std::string message;
};

struct BatchResult {
  ProfileTable table;  // rows in manifest order (pairs expanded in pair order)
  std::vector<BatchFailure> failures;
};

/// Runs entries concurrently on up to `jobs` threads (COMPLEXITY_JOBS caps
/// the value); outputs are buffered per entry, so row order and bytes do not
/// depend on the schedule. Per-entry failures are collected, not fatal.
BatchResult run_batch(const Manifest& manifest, std::size_t jobs);

/// Writes profiles.csv, profiles.jsonl and failures.jsonl under dir.
void write_batch_outputs(const BatchResult& result, const std::string& dir);

}  // namespace dcm

#endif
