#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "coopstore/field.hpp"
#include "coopstore/params.hpp"

namespace coopstore::cli {

enum class Variant : std::uint8_t { Stable = 0, CodeA = 1, CodeB = 2 };

Variant parse_variant(const std::string& s);
std::string variant_name(Variant v);

inline constexpr std::size_t kShardHeaderSize = 64;
inline constexpr std::uint16_t kShardVersion = 1;

/// Fixed 64-byte little-endian header; see README for the byte layout.
struct ShardHeader {
  Variant variant = Variant::Stable;
  FieldSpec field;
  CodeParams params;
  NodeId node = 0;
  std::uint64_t generations = 0;
  std::uint8_t symbol_width = 0;

  friend bool operator==(const ShardHeader&, const ShardHeader&) = default;
};

struct ShardFile {
  ShardHeader header;
  /// generations × α symbols, generation-major.
  std::vector<FieldElem> payload;
};

std::vector<std::uint8_t> serialize_shard(const ShardFile& shard);
/// Throws CorruptShard on bad magic, version, checksum or length.
ShardFile parse_shard(const std::vector<std::uint8_t>& bytes, const Field& field);
ShardHeader parse_shard_header(const std::vector<std::uint8_t>& bytes);

void write_shard(const std::filesystem::path& path, const ShardFile& shard);
ShardFile read_shard(const std::filesystem::path& path, const Field& field);
ShardHeader read_shard_header(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

std::string shard_file_name(NodeId node);

struct ManifestEntry {
  NodeId node = 0;
  std::string file;
  /// "ok", "failed" or "repaired"
  std::string status = "ok";
};

/// manifest.json beside the shard files; failed shards move to failed/.
struct Manifest {
  Variant variant = Variant::Stable;
  FieldSpec field;
  CodeParams params;
  std::uint64_t input_bytes = 0;
  std::uint64_t generations = 0;
  std::vector<ManifestEntry> nodes;

  ManifestEntry& entry(NodeId node);
  const ManifestEntry& entry(NodeId node) const;
  nlohmann::json to_json() const;
  static Manifest from_json(const nlohmann::json& j);
};

inline constexpr const char* kManifestName = "manifest.json";

void write_manifest(const std::filesystem::path& dir, const Manifest& m);
/// Throws IoError if missing, InvalidConfig if malformed.
Manifest read_manifest(const std::filesystem::path& dir);

}  // namespace coopstore::cli
