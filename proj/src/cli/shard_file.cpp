#include "coopstore/cli/shard_file.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>
#include <iterator>

#include "coopstore/error.hpp"

namespace coopstore::cli {

namespace {

constexpr char kMagic[4] = {'C', 'R', 'C', 'S'};
constexpr std::size_t kCrcOffset = 60;

template <typename T>
void put(std::vector<std::uint8_t>& buf, std::size_t off, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[off + i] = static_cast<std::uint8_t>(static_cast<std::uint64_t>(v) >> (8 * i));
}

template <typename T>
T get(const std::vector<std::uint8_t>& buf, std::size_t off) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= std::uint64_t{buf[off + i]} << (8 * i);
  return static_cast<T>(v);
}

std::uint32_t crc_of(const std::uint8_t* data, std::size_t len) {
  return static_cast<std::uint32_t>(crc32(0L, data, static_cast<uInt>(len)));
}

}  // namespace

Variant parse_variant(const std::string& s) {
  if (s == "stable") return Variant::Stable;
  if (s == "code-a") return Variant::CodeA;
  if (s == "code-b") return Variant::CodeB;
  throw Error(Errc::InvalidConfig, "unknown variant '" + s + "' (stable, code-a, code-b)");
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Stable: return "stable";
    case Variant::CodeA: return "code-a";
    case Variant::CodeB: return "code-b";
  }
  return "unknown";
}

std::vector<std::uint8_t> serialize_shard(const ShardFile& shard) {
  const auto& h = shard.header;
  const auto& p = h.params;
  const std::size_t width = h.symbol_width;
  if (shard.payload.size() != h.generations * p.alpha) {
    throw Error(Errc::DimensionMismatch, "payload size does not match generations * alpha");
  }
  std::vector<std::uint8_t> buf(kShardHeaderSize + shard.payload.size() * width, 0);
  std::memcpy(buf.data(), kMagic, 4);
  put<std::uint16_t>(buf, 4, kShardVersion);
  put<std::uint8_t>(buf, 6, static_cast<std::uint8_t>(h.variant));
  put<std::uint8_t>(buf, 7, static_cast<std::uint8_t>(h.field.kind));
  put<std::uint32_t>(buf, 8, static_cast<std::uint32_t>(h.field.kind == FieldKind::Prime ? h.field.p : h.field.m));
  put<std::uint32_t>(buf, 12, static_cast<std::uint32_t>(h.field.poly));
  put<std::uint16_t>(buf, 16, p.n);
  put<std::uint16_t>(buf, 18, p.k);
  put<std::uint16_t>(buf, 20, p.d);
  put<std::uint16_t>(buf, 22, p.t);
  put<std::uint32_t>(buf, 24, p.alpha);
  put<std::uint32_t>(buf, 28, p.beta);
  put<std::uint32_t>(buf, 32, p.beta_prime);
  put<std::uint32_t>(buf, 36, p.B);
  put<std::uint32_t>(buf, 40, static_cast<std::uint32_t>(p.q));
  put<std::uint16_t>(buf, 44, h.node);
  put<std::uint64_t>(buf, 48, h.generations);
  put<std::uint8_t>(buf, 56, h.symbol_width);
  put<std::uint32_t>(buf, kCrcOffset, crc_of(buf.data(), kCrcOffset));
  for (std::size_t i = 0; i < shard.payload.size(); ++i) {
    const std::uint64_t v = shard.payload[i].value;
    for (std::size_t b = 0; b < width; ++b) buf[kShardHeaderSize + i * width + b] = static_cast<std::uint8_t>(v >> (8 * b));
  }
  return buf;
}

ShardHeader parse_shard_header(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kShardHeaderSize) throw Error(Errc::CorruptShard, "file shorter than the shard header");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw Error(Errc::CorruptShard, "bad magic");
  if (get<std::uint16_t>(bytes, 4) != kShardVersion) throw Error(Errc::CorruptShard, "unsupported shard version");
  if (get<std::uint32_t>(bytes, kCrcOffset) != crc_of(bytes.data(), kCrcOffset)) {
    throw Error(Errc::CorruptShard, "header checksum mismatch");
  }
  ShardHeader h;
  const auto variant = get<std::uint8_t>(bytes, 6);
  if (variant > 2) throw Error(Errc::CorruptShard, "unknown variant tag");
  h.variant = static_cast<Variant>(variant);
  const auto kind = get<std::uint8_t>(bytes, 7);
  const auto pm = get<std::uint32_t>(bytes, 8);
  const auto poly = get<std::uint32_t>(bytes, 12);
  if (kind == static_cast<std::uint8_t>(FieldKind::Prime)) {
    h.field = FieldSpec::prime(pm);
  } else if (kind == static_cast<std::uint8_t>(FieldKind::BinaryExtension)) {
    h.field = FieldSpec::binary(pm, poly);
  } else {
    throw Error(Errc::CorruptShard, "unknown field kind");
  }
  auto& p = h.params;
  p.n = get<std::uint16_t>(bytes, 16);
  p.k = get<std::uint16_t>(bytes, 18);
  p.d = get<std::uint16_t>(bytes, 20);
  p.t = get<std::uint16_t>(bytes, 22);
  p.alpha = get<std::uint32_t>(bytes, 24);
  p.beta = get<std::uint32_t>(bytes, 28);
  p.beta_prime = get<std::uint32_t>(bytes, 32);
  p.B = get<std::uint32_t>(bytes, 36);
  p.q = get<std::uint32_t>(bytes, 40);
  h.node = get<std::uint16_t>(bytes, 44);
  h.generations = get<std::uint64_t>(bytes, 48);
  h.symbol_width = get<std::uint8_t>(bytes, 56);
  if (h.symbol_width == 0 || h.symbol_width > 8) throw Error(Errc::CorruptShard, "bad symbol width");
  if (h.node < 1 || h.node > p.n) throw Error(Errc::CorruptShard, "node id outside [1, n]");
  return h;
}

ShardFile parse_shard(const std::vector<std::uint8_t>& bytes, const Field& field) {
  ShardFile out;
  out.header = parse_shard_header(bytes);
  const auto& h = out.header;
  const std::uint64_t count = h.generations * h.params.alpha;
  if (bytes.size() != kShardHeaderSize + count * h.symbol_width) {
    throw Error(Errc::CorruptShard, "payload length does not match header");
  }
  out.payload.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < h.symbol_width; ++b) {
      v |= std::uint64_t{bytes[kShardHeaderSize + i * h.symbol_width + b]} << (8 * b);
    }
    if (!field.contains(FieldElem{v})) throw Error(Errc::CorruptShard, "payload symbol outside the field");
    out.payload.push_back(FieldElem{v});
  }
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::IoError, "short write to " + path.string());
}

void write_shard(const std::filesystem::path& path, const ShardFile& shard) { write_file(path, serialize_shard(shard)); }

ShardFile read_shard(const std::filesystem::path& path, const Field& field) { return parse_shard(read_file(path), field); }

ShardHeader read_shard_header(const std::filesystem::path& path) { return parse_shard_header(read_file(path)); }

std::string shard_file_name(NodeId node) { return "node_" + std::to_string(node) + ".crcs"; }

}  // namespace coopstore::cli

namespace coopstore::cli {

const ManifestEntry& Manifest::entry(NodeId node) const {
  for (const auto& e : nodes) {
    if (e.node == node) return e;
  }
  throw Error(Errc::InvalidConfig, "manifest has no node " + std::to_string(node));
}

ManifestEntry& Manifest::entry(NodeId node) {
  return const_cast<ManifestEntry&>(static_cast<const Manifest&>(*this).entry(node));
}

nlohmann::json Manifest::to_json() const {
  nlohmann::json j;
  j["version"] = kShardVersion;
  j["variant"] = variant_name(variant);
  j["field"] = field.to_string();
  j["params"] = {{"n", params.n},         {"k", params.k},       {"d", params.d},
                 {"t", params.t},         {"alpha", params.alpha}, {"beta", params.beta},
                 {"beta_prime", params.beta_prime}, {"B", params.B}, {"q", params.q}};
  j["input_bytes"] = input_bytes;
  j["generations"] = generations;
  auto arr = nlohmann::json::array();
  for (const auto& e : nodes) arr.push_back({{"node", e.node}, {"file", e.file}, {"status", e.status}});
  j["nodes"] = arr;
  return j;
}

Manifest Manifest::from_json(const nlohmann::json& j) {
  try {
    Manifest m;
    if (j.at("version").get<unsigned>() != kShardVersion) throw Error(Errc::InvalidConfig, "unsupported manifest version");
    m.variant = parse_variant(j.at("variant").get<std::string>());
    m.field = FieldSpec::parse(j.at("field").get<std::string>());
    const auto& p = j.at("params");
    m.params.n = p.at("n").get<unsigned>();
    m.params.k = p.at("k").get<unsigned>();
    m.params.d = p.at("d").get<unsigned>();
    m.params.t = p.at("t").get<unsigned>();
    m.params.alpha = p.at("alpha").get<unsigned>();
    m.params.beta = p.at("beta").get<unsigned>();
    m.params.beta_prime = p.at("beta_prime").get<unsigned>();
    m.params.B = p.at("B").get<unsigned>();
    m.params.q = p.at("q").get<std::uint64_t>();
    m.input_bytes = j.at("input_bytes").get<std::uint64_t>();
    m.generations = j.at("generations").get<std::uint64_t>();
    for (const auto& e : j.at("nodes")) {
      m.nodes.push_back({e.at("node").get<NodeId>(), e.at("file").get<std::string>(), e.at("status").get<std::string>()});
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidConfig, std::string("malformed manifest: ") + e.what());
  }
}

void write_manifest(const std::filesystem::path& dir, const Manifest& m) {
  const std::string text = m.to_json().dump(2) + "\n";
  write_file(dir / kManifestName, std::vector<std::uint8_t>(text.begin(), text.end()));
}

Manifest read_manifest(const std::filesystem::path& dir) {
  const auto bytes = read_file(dir / kManifestName);
  try {
    return Manifest::from_json(nlohmann::json::parse(bytes.begin(), bytes.end()));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::InvalidConfig, std::string("manifest is not JSON: ") + e.what());
  }
}

}  // namespace coopstore::cli
