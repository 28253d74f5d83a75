#include "coopstore/cli/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>

#include "coopstore/error.hpp"

namespace coopstore::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::InvalidConfig, what); }

std::uint64_t parse_u64(std::string_view v, const std::string& what) {
  std::uint64_t out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
    bad("bad number '" + std::string(v) + "' in " + what);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t at = std::min(s.find(sep, pos), s.size());
    if (at > pos) out.push_back(s.substr(pos, at - pos));
    pos = at + 1;
  }
  return out;
}

std::map<std::string, unsigned> parse_params_text(const std::string& text) {
  std::map<std::string, unsigned> out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) bad("params item '" + item + "' is not key=value");
    const auto key = item.substr(0, eq);
    if (key != "n" && key != "k" && key != "d" && key != "t") bad("unknown params key '" + key + "'");
    out[key] = static_cast<unsigned>(parse_u64(item.substr(eq + 1), "params"));
  }
  return out;
}

std::map<std::string, unsigned> parse_params_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_params_text(j.get<std::string>());
  if (!j.is_object()) bad("\"params\" must be an object or a string");
  std::map<std::string, unsigned> out;
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "k" && key != "d" && key != "t") bad("unknown params key '" + key + "'");
    if (!value.is_number_unsigned()) bad("params." + key + " must be a non-negative integer");
    out[key] = value.get<unsigned>();
  }
  return out;
}

Range range_from_json(const nlohmann::json& j, const std::string& key) {
  if (j.is_number_unsigned()) return Range{j.get<unsigned>(), j.get<unsigned>()};
  if (j.is_array() && j.size() == 2 && j[0].is_number_unsigned() && j[1].is_number_unsigned()) {
    return Range{j[0].get<unsigned>(), j[1].get<unsigned>()};
  }
  if (j.is_string()) return Range::parse(j.get<std::string>());
  bad("\"" + key + "\" must be an integer, [lo, hi] or \"lo:hi\"");
}

NodeSet nodes_from_json(const nlohmann::json& j, const std::string& key) {
  if (j.is_string()) return parse_node_list(j.get<std::string>());
  if (!j.is_array()) bad("\"" + key + "\" must be a list of node ids");
  NodeSet out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) bad("\"" + key + "\" must contain node ids");
    out.push_back(v.get<NodeId>());
  }
  return out;
}

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open config " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad("config " + path.string() + ": " + e.what());
  }
}

}  // namespace

Range Range::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const auto v = static_cast<unsigned>(parse_u64(text, "range"));
    return Range{v, v};
  }
  return Range{static_cast<unsigned>(parse_u64(text.substr(0, colon), "range")),
               static_cast<unsigned>(parse_u64(text.substr(colon + 1), "range"))};
}

std::string Range::to_string() const { return std::to_string(lo) + ":" + std::to_string(hi); }

NodeSet parse_node_list(const std::string& text) {
  NodeSet out;
  for (const auto& item : split(text, ',')) out.push_back(static_cast<NodeId>(parse_u64(item, "node list")));
  return out;
}

Placement parse_placement(const std::string& text) {
  Placement p;
  for (const auto& part : split(text, ';')) {
    if (part.size() < 2 || part[1] != '=') bad("placement part '" + part + "' must be E=... or F=...");
    if (part[0] == 'E') {
      p.E = parse_node_list(part.substr(2));
    } else if (part[0] == 'F') {
      p.F = parse_node_list(part.substr(2));
    } else {
      bad("placement part '" + part + "' must be E=... or F=...");
    }
  }
  return p;
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["variant"] = variant_name(variant);
  j["field"] = field_spec.to_string();
  j["params"] = {{"n", params.n},         {"k", params.k},   {"d", params.d}, {"t", params.t},
                 {"alpha", params.alpha}, {"beta", params.beta}, {"beta_prime", params.beta_prime},
                 {"B", params.B},         {"q", params.q}};
  j["seed"] = seed;
  j["seed_source"] = seed_source;
  if (omega) j["omega"] = *omega;
  if (l1) j["l1"] = {l1->lo, l1->hi};
  if (l2) j["l2"] = {l2->lo, l2->hi};
  if (!group.empty()) j["group"] = group;
  if (!helpers.empty()) j["helpers"] = helpers;
  if (!placements.empty()) {
    auto arr = nlohmann::json::array();
    for (const auto& p : placements) arr.push_back({{"E", p.E}, {"F", p.F}});
    j["eve"] = arr;
  }
  if (secret_len) j["secret_len"] = *secret_len;
  return j;
}

ExperimentConfig load_config(const std::optional<std::filesystem::path>& file, const ConfigOverrides& ov) {
  ExperimentConfig cfg;
  std::map<std::string, unsigned> raw = {{"n", 6}, {"k", 3}, {"d", 3}, {"t", 2}};
  bool params_given = false;
  std::optional<std::uint64_t> file_seed;

  if (file) {
    const auto j = read_json(*file);
    if (!j.is_object()) bad("config root must be an object");
    for (const auto& [key, value] : j.items()) {
      if (key == "params") {
        raw = parse_params_json(value);
        params_given = true;
      } else if (key == "field") {
        if (!value.is_string()) bad("\"field\" must be a string such as \"p=11\"");
        cfg.field_spec = FieldSpec::parse(value.get<std::string>());
      } else if (key == "variant") {
        if (!value.is_string()) bad("\"variant\" must be a string");
        cfg.variant = parse_variant(value.get<std::string>());
      } else if (key == "seed") {
        if (!value.is_number_unsigned()) bad("\"seed\" must be a non-negative integer");
        file_seed = value.get<std::uint64_t>();
      } else if (key == "omega") {
        if (!value.is_number_unsigned()) bad("\"omega\" must be a non-negative integer");
        cfg.omega = value.get<std::uint64_t>();
      } else if (key == "l1") {
        cfg.l1 = range_from_json(value, key);
      } else if (key == "l2") {
        cfg.l2 = range_from_json(value, key);
      } else if (key == "group") {
        cfg.group = nodes_from_json(value, key);
      } else if (key == "helpers") {
        cfg.helpers = nodes_from_json(value, key);
      } else if (key == "eve") {
        if (!value.is_array()) bad("\"eve\" must be a list of {\"E\": [...], \"F\": [...]}");
        for (const auto& p : value) {
          if (!p.is_object()) bad("\"eve\" entries must be objects");
          Placement pl;
          if (p.contains("E")) pl.E = nodes_from_json(p["E"], "eve.E");
          if (p.contains("F")) pl.F = nodes_from_json(p["F"], "eve.F");
          cfg.placements.push_back(pl);
        }
      } else if (key == "secret_len") {
        if (!value.is_number_unsigned()) bad("\"secret_len\" must be a non-negative integer");
        cfg.secret_len = value.get<std::size_t>();
      } else {
        bad("unknown config key \"" + key + "\"");
      }
    }
  }

  if (ov.params) {
    raw = parse_params_text(*ov.params);
    params_given = true;
  }
  if (ov.field) cfg.field_spec = FieldSpec::parse(*ov.field);
  if (ov.variant) cfg.variant = parse_variant(*ov.variant);
  if (ov.omega) cfg.omega = *ov.omega;
  if (ov.l1) cfg.l1 = Range::parse(*ov.l1);
  if (ov.l2) cfg.l2 = Range::parse(*ov.l2);
  if (ov.group) cfg.group = parse_node_list(*ov.group);
  if (ov.helpers) cfg.helpers = parse_node_list(*ov.helpers);
  if (!ov.placements.empty()) {
    cfg.placements.clear();
    for (const auto& p : ov.placements) cfg.placements.push_back(parse_placement(p));
  }
  if (ov.secret_len) cfg.secret_len = *ov.secret_len;

  if (ov.seed) {
    cfg.seed = *ov.seed;
    cfg.seed_source = "flag";
  } else if (file_seed) {
    cfg.seed = *file_seed;
    cfg.seed_source = "config";
  } else if (const char* env = std::getenv("COOPSTORE_SEED"); env != nullptr && *env != '\0') {
    cfg.seed = parse_u64(env, "COOPSTORE_SEED");
    cfg.seed_source = "env";
  }

  cfg.field = Field::create(cfg.field_spec);
  const std::uint64_t q = cfg.field.order();
  if (cfg.variant == Variant::CodeA) {
    // Code-A fixes k = t = 2 and n = d + 2; only d is free.
    if (!params_given) raw = {{"d", 3}};
    if (!raw.count("d")) bad("code-a needs params d=<value>");
    const unsigned d = raw.at("d");
    const unsigned n = raw.count("n") ? raw.at("n") : d + 2;
    if (n != d + 2 || (raw.count("k") && raw.at("k") != 2) || (raw.count("t") && raw.at("t") != 2)) {
      bad("code-a requires k = t = 2 and n = d + 2");
    }
    cfg.params = CodeParams::mscr(n, 2, d, 2, q);
    cfg.params.validate();
  } else {
    for (const char* key : {"n", "k", "t"}) {
      if (!raw.count(key)) bad(std::string("params missing ") + key);
    }
    const unsigned k = raw.at("k");
    const unsigned d = raw.count("d") ? raw.at("d") : k;
    cfg.params = CodeParams::mscr(raw.at("n"), k, d, raw.at("t"), q);
    cfg.params.validate_stable();
  }
  return cfg;
}

FieldElem SymbolRng::draw(const Field& field) {
  ++draws_;
  return field.element(engine_() % field.order());
}

std::uint64_t SymbolRng::index(std::uint64_t bound) {
  ++draws_;
  return engine_() % bound;
}

std::vector<FieldElem> SymbolRng::draw(const Field& field, std::size_t count) {
  std::vector<FieldElem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(draw(field));
  return out;
}

}  // namespace coopstore::cli
