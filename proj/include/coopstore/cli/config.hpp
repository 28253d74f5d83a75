#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "coopstore/cli/shard_file.hpp"
#include "coopstore/field.hpp"
#include "coopstore/params.hpp"

namespace coopstore::cli {

/// Inclusive range; lo > hi is the empty range.
struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
  bool empty() const { return lo > hi; }
  bool single() const { return lo == hi; }
  /// "2" or "0:2"
  static Range parse(const std::string& text);
  std::string to_string() const;
};

struct Placement {
  NodeSet E;
  NodeSet F;
};

struct ExperimentConfig {
  Variant variant = Variant::Stable;
  FieldSpec field_spec = FieldSpec::prime(11);
  Field field;
  CodeParams params;
  /// Code-A multiplier; nullopt picks the smallest admissible generator.
  std::optional<std::uint64_t> omega;
  std::uint64_t seed = 1;
  std::string seed_source = "default";
  /// Empty means every l with l1 + l2 ≤ k − 1.
  std::optional<Range> l1;
  std::optional<Range> l2;
  NodeSet group;
  NodeSet helpers;
  /// Explicit eavesdropper placements; empty means exhaustive.
  std::vector<Placement> placements;
  std::optional<std::size_t> secret_len;

  nlohmann::json to_json() const;
};

/// Command-line values; each one set replaces the config-file value.
struct ConfigOverrides {
  std::optional<std::string> params;
  std::optional<std::string> field;
  std::optional<std::string> variant;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> omega;
  std::optional<std::string> l1;
  std::optional<std::string> l2;
  std::optional<std::string> group;
  std::optional<std::string> helpers;
  std::vector<std::string> placements;
  std::optional<std::size_t> secret_len;
};

/// Merges defaults, the JSON file, COOPSTORE_SEED and the overrides, then
/// validates the parameters. Throws InvalidConfig / InvalidParams / IoError.
ExperimentConfig load_config(const std::optional<std::filesystem::path>& file, const ConfigOverrides& overrides);

/// "1,2,3" -> {1,2,3}; empty string -> {}.
NodeSet parse_node_list(const std::string& text);
/// "E=1,2;F=3" (either part may be omitted).
Placement parse_placement(const std::string& text);

/// Seeded symbol source. Uses the raw mt19937_64 stream so draws are identical
/// across standard libraries.
class SymbolRng {
 public:
  explicit SymbolRng(std::uint64_t seed) : engine_(seed) {}
  FieldElem draw(const Field& field);
  std::vector<FieldElem> draw(const Field& field, std::size_t count);
  /// Uniform-ish index in [0, bound).
  std::uint64_t index(std::uint64_t bound);
  std::uint64_t draws() const { return draws_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace coopstore::cli
