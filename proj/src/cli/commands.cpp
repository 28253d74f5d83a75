#include "coopstore/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "coopstore/cli/shard_file.hpp"
#include "coopstore/cli/striping.hpp"
#include "coopstore/eavesdropper.hpp"
#include "coopstore/error.hpp"
#include "coopstore/legacy_codes.hpp"
#include "coopstore/secure_precoder.hpp"
#include "coopstore/stable_code.hpp"

namespace coopstore::cli {

namespace fs = std::filesystem;

namespace {

// Placements are enumerated exhaustively up to this many nodes, sampled above.
constexpr unsigned kExhaustiveNodes = 8;
constexpr std::size_t kSampledPlacements = 200;
// Largest message space the brute-force entropy oracle is asked to enumerate.
constexpr std::uint64_t kOracleLimit = std::uint64_t{1} << 20;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string rational_text(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

nlohmann::json symbols_json(const Field& f, std::span<const FieldElem> v) {
  auto arr = nlohmann::json::array();
  for (auto e : v) arr.push_back(f.format(e));
  return arr;
}

nlohmann::json observations_json(const ObservationSet& obs) {
  auto arr = nlohmann::json::array();
  for (std::size_t r = 0; r < obs.size(); ++r) {
    arr.push_back({{"label", obs.labels()[r]}, {"row", symbols_json(obs.field(), obs.rows().row(r))}});
  }
  return arr;
}

/// Stable or Code-B code behind one interface for the file commands.
class Codec {
 public:
  Codec(Variant v, const CodeParams& p, const Field& f) : params_(p), field_(f) {
    if (v == Variant::Stable) {
      stable_ = StableCode::create(p.n, p.k, p.t, f);
    } else if (v == Variant::CodeB) {
      code_b_ = CodeB::create(p.n, p.k, p.t, f);
    } else {
      throw Error(Errc::InvalidConfig, "file commands support the stable and code-b variants only");
    }
  }

  std::vector<ShardVector> encode(std::span<const FieldElem> vec) const {
    const Mat data = Mat::from_elems(field_, params_.t, params_.k, {vec.begin(), vec.end()});
    return stable_ ? stable_->encode(data) : code_b_->encode(data);
  }

  std::vector<FieldElem> reconstruct(std::span<const ShardVector> shards) const {
    if (stable_) return stable_->vec_from_data(stable_->reconstruct(shards));
    // Code-B has no dedicated decoder: solve the stacked storage functionals.
    Mat A(field_, 0, params_.B);
    std::vector<FieldElem> y;
    std::set<NodeId> seen;
    for (const auto& s : shards) {
      if (seen.size() == params_.k) break;
      if (!seen.insert(s.node).second) throw Error(Errc::DuplicateNode, "shard " + std::to_string(s.node) + " given twice");
      A = vstack(A, code_b_->storage_functionals(s.node));
      y.insert(y.end(), s.symbols.begin(), s.symbols.end());
    }
    if (seen.size() < params_.k) throw Error(Errc::TooFewShards, "need k = " + std::to_string(params_.k) + " shards");
    return (invert(A) * Mat::column_vector(field_, y)).entries();
  }

  std::vector<ShardVector> repair(const RepairContext& ctx, std::span<const ShardVector> surviving,
                                  RepairTranscript* tr) const {
    return stable_ ? stable_->cooperative_repair(ctx, surviving, tr) : code_b_->repair(ctx, surviving, tr);
  }

 private:
  CodeParams params_;
  Field field_;
  std::optional<StableCode> stable_;
  std::optional<CodeB> code_b_;
};

bool usable(const fs::path& dir, const ManifestEntry& e) { return e.status != "failed" && fs::exists(dir / e.file); }

ShardVector generation_slice(const ShardFile& shard, std::uint64_t g) {
  const unsigned a = shard.header.params.alpha;
  const auto first = shard.payload.begin() + static_cast<std::ptrdiff_t>(g * a);
  return ShardVector{shard.header.node, std::vector<FieldElem>(first, first + a)};
}

void check_shard_against(const ShardFile& s, const Manifest& m, NodeId node) {
  const auto& h = s.header;
  if (h.node != node || h.params != m.params || h.variant != m.variant || h.field != m.field ||
      h.generations != m.generations) {
    throw Error(Errc::CorruptShard, "shard for node " + std::to_string(node) + " disagrees with the manifest");
  }
}

std::unique_ptr<RepairModel> make_model(const ExperimentConfig& cfg) {
  const auto& p = cfg.params;
  switch (cfg.variant) {
    case Variant::Stable: return std::make_unique<StableRepairModel>(StableCode::create(p.n, p.k, p.t, cfg.field));
    case Variant::CodeB: return std::make_unique<CodeBRepairModel>(CodeB::create(p.n, p.k, p.t, cfg.field));
    case Variant::CodeA: return std::make_unique<CodeARepairModel>(code_a_init(p.d, cfg.field, resolve_omega(cfg)));
  }
  throw Error(Errc::InvalidConfig, "unknown variant");
}

std::vector<std::pair<unsigned, unsigned>> sweep_pairs(const ExperimentConfig& cfg) {
  const unsigned top = cfg.params.k - 1;
  const Range r1 = cfg.l1.value_or(Range{0, top});
  const Range r2 = cfg.l2.value_or(Range{0, top});
  std::vector<std::pair<unsigned, unsigned>> out;
  if (r1.empty() || r2.empty()) return out;
  for (unsigned l1 = r1.lo; l1 <= r1.hi; ++l1) {
    for (unsigned l2 = r2.lo; l2 <= r2.hi; ++l2) {
      if (l1 + l2 <= top) out.emplace_back(l1, l2);
    }
  }
  return out;
}

/// Explicit placements of the right shape, or every placement (sampled above kExhaustiveNodes).
std::vector<EveModel> placements_for(const ExperimentConfig& cfg, const RepairModel& model, unsigned l1,
                                     unsigned l2, SymbolRng& rng, bool& sampled) {
  const auto& p = cfg.params;
  std::vector<EveModel> out;
  sampled = false;
  if (!cfg.placements.empty()) {
    for (const auto& pl : cfg.placements) {
      if (pl.E.size() == l1 && pl.F.size() == l2) out.push_back(EveModel::make(p, pl.E, pl.F));
    }
  } else {
    out = all_placements(p, l1, l2);
    if (p.n > kExhaustiveNodes && out.size() > kSampledPlacements) {
      for (std::size_t i = 0; i < kSampledPlacements; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.index(out.size() - i));
        std::swap(out[i], out[j]);
      }
      out.resize(kSampledPlacements);
      sampled = true;
    }
  }
  std::erase_if(out, [&](const EveModel& e) {
    return std::any_of(e.F.begin(), e.F.end(), [&](NodeId f) { return !model.models_receiver(f); });
  });
  return out;
}

nlohmann::json eve_json(const EveModel& e) { return {{"E", e.E}, {"F", e.F}, {"G", e.G}}; }

// Symbol counts converted to bits, both as a float and as an exact log2 sum.
nlohmann::json bits_json(std::size_t symbols, std::uint64_t q) {
  const auto b = ExactBits::symbols(symbols, q);
  return {{"value", b.bits()}, {"exact", b.to_string()}};
}

/// The stable code itself when q^B is small enough to enumerate, otherwise
/// the same (n, k, t) over the smallest prime field that admits it.
std::optional<StableCode> oracle_twin(const CodeParams& p, const Field& f) {
  auto fits = [&](std::uint64_t q) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < p.B; ++i) {
      total *= q;
      if (total > kOracleLimit) return false;
    }
    return true;
  };
  if (fits(f.order())) return StableCode::create(p.n, p.k, p.t, f);
  for (std::uint64_t q = p.n + 1; fits(q); ++q) {
    if (!is_prime(q)) continue;
    try {
      return StableCode::create(p.n, p.k, p.t, Field::create(FieldSpec::prime(q)));
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

void entropy_oracle_checks(Report& rep, const CodeParams& p, const Field& f) {
  const auto twin = oracle_twin(p, f);
  if (!twin) {
    rep.log.push_back("entropy oracle: no field with q^B <= 2^20 admits this code; cross-check not run");
    return;
  }
  const StableRepairModel model(*twin);
  const auto& tp = twin->params();
  std::vector<ObservationSet> sets;
  for (NodeId i = 1; i <= tp.n; ++i) sets.push_back(storage_set(model, {i}));
  for (const auto& e : all_placements(tp, 0, 1)) sets.push_back(leakage_observations(model, e));
  const auto mixed = all_placements(tp, std::min(1u, tp.k - 1), tp.k > 1 ? 1u : 0u);
  for (std::size_t i = 0; i < mixed.size() && i < 4; ++i) sets.push_back(leakage_observations(model, mixed[i]));
  std::size_t agree = 0;
  std::string first_bad;
  for (const auto& s : sets) {
    const auto brute = brute_force_entropy(s);
    const auto ranked = ExactBits::symbols(entropy_symbols(s), tp.q);
    if (brute == ranked) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = "brute " + brute.to_string() + " vs rank " + ranked.to_string();
    }
  }
  std::string detail = std::to_string(agree) + "/" + std::to_string(sets.size()) + " observation sets over " +
                       twin->field().describe();
  if (!first_bad.empty()) detail += "; " + first_bad;
  rep.check("entropy oracle: brute force = rank*log2(q)", agree == sets.size(), detail);
}

void bandwidth_check(Report& rep, const CodeParams& p) {
  const auto bw = bandwidth_comparison(p.n, p.k, p.d, p.t, p.B);
  const char* rel = bw.mscr_total < bw.msr_total ? " < " : (bw.mscr_total == bw.msr_total ? " = " : " > ");
  const std::string line = "MSCR " + rational_text(bw.mscr_total) + rel + "MSR " + rational_text(bw.msr_total);
  rep.log.push_back("bandwidth: " + line + " symbols per " + std::to_string(p.t) + "-failure repair");
  rep.extra["bandwidth"] = {{"mscr", rational_text(bw.mscr_total)}, {"msr", rational_text(bw.msr_total)}};
  // One failure, or k = 1, makes the two totals coincide.
  const bool strict = p.t >= 2 && p.k >= 2;
  rep.check("bandwidth: " + line, strict ? bw.mscr_total < bw.msr_total : bw.mscr_total == bw.msr_total);
}

void stability_check(Report& rep, const RepairModel& model) {
  const auto cert = stability_certificate(model);
  std::string detail = std::to_string(cert.contexts_checked) + " contexts, " + std::to_string(cert.transfers_checked) +
                       " transfers";
  if (cert.witness) {
    const std::string w = cert.witness->describe(model.field());
    rep.log.push_back("stability witness: " + w);
    rep.extra["stability_witness"] = {
        {"helper", cert.witness->helper},
        {"receiver", cert.witness->receiver},
        {"first", cert.witness->first.to_string()},
        {"first_row", symbols_json(model.field(), cert.witness->first_row)},
        {"second", cert.witness->second.to_string()},
        {"second_row", symbols_json(model.field(), cert.witness->second_row)},
    };
    detail += "; " + w;
  }
  rep.check("stability certificate", cert.stable, detail);
  if (cert.stable) rep.log.push_back(std::string("exchange symbols context-free: ") + (cert.exchange_fixed ? "yes" : "no"));
}

void lemma_rows(Report& rep, const std::vector<LemmaResult>& results) {
  for (const auto& r : results) {
    rep.lemmas.push_back({{"name", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"witness", r.witness}});
    std::string detail = std::to_string(r.checks) + " checks";
    if (!r.pass) detail += "; " + r.witness;
    rep.check(r.name, r.pass, detail);
  }
}

}  // namespace

FieldElem resolve_omega(const ExperimentConfig& cfg) {
  const Field& f = cfg.field;
  if (cfg.omega) return f.element(*cfg.omega);
  for (std::uint64_t raw = 2; raw < f.order(); ++raw) {
    try {
      code_a_init(cfg.params.d, f, f.element(raw));
      return f.element(raw);
    } catch (const Error& e) {
      if (e.code() != Errc::NotGenerator && e.code() != Errc::InadmissibleOmega) throw;
    }
  }
  throw Error(Errc::InadmissibleOmega, "no admissible omega in " + f.describe());
}

Report cmd_encode(const ExperimentConfig& cfg, const fs::path& input, const fs::path& out_dir) {
  Stopwatch clock;
  Report rep;
  rep.command = "encode";
  rep.config = cfg.to_json();
  const auto& p = cfg.params;
  const Codec codec(cfg.variant, p, cfg.field);
  const auto bytes = read_file(input);
  if (bytes.empty()) throw Error(Errc::InvalidConfig, "input file " + input.string() + " is empty");

  const auto symbols = pack_bytes(cfg.field, bytes, p.B);
  const auto generations = stripe(symbols, p.B);
  std::vector<ShardFile> shards(p.n);
  for (NodeId j = 1; j <= p.n; ++j) {
    auto& h = shards[j - 1].header;
    h.variant = cfg.variant;
    h.field = cfg.field_spec;
    h.params = p;
    h.node = j;
    h.generations = generations.size();
    h.symbol_width = static_cast<std::uint8_t>(cfg.field.symbol_bytes());
  }
  for (const auto& gen : generations) {
    for (const auto& s : codec.encode(gen)) {
      auto& payload = shards[s.node - 1].payload;
      payload.insert(payload.end(), s.symbols.begin(), s.symbols.end());
    }
  }

  fs::create_directories(out_dir);
  Manifest m;
  m.variant = cfg.variant;
  m.field = cfg.field_spec;
  m.params = p;
  m.input_bytes = bytes.size();
  m.generations = generations.size();
  for (const auto& s : shards) {
    const std::string name = shard_file_name(s.header.node);
    write_shard(out_dir / name, s);
    m.nodes.push_back({s.header.node, name, "ok"});
  }
  write_manifest(out_dir, m);

  // Round trip through the first k shards as written.
  std::vector<ShardVector> first_k;
  std::vector<FieldElem> decoded;
  for (std::uint64_t g = 0; g < generations.size(); ++g) {
    first_k.clear();
    for (NodeId j = 1; j <= p.k; ++j) first_k.push_back(generation_slice(shards[j - 1], g));
    const auto v = codec.reconstruct(first_k);
    decoded.insert(decoded.end(), v.begin(), v.end());
  }
  const bool round_trip = unpack_bytes(cfg.field, decoded) == bytes;

  rep.log.push_back("encoded " + std::to_string(bytes.size()) + " bytes into " + std::to_string(generations.size()) +
                    " generations of B=" + std::to_string(p.B) + " symbols over " + cfg.field.describe());
  rep.log.push_back("wrote " + std::to_string(p.n) + " shards of " + std::to_string(generations.size() * p.alpha) +
                    " symbols to " + out_dir.string());
  rep.extra["generations"] = generations.size();
  rep.extra["symbols_per_shard"] = generations.size() * p.alpha;
  rep.extra["input_bytes"] = bytes.size();
  rep.check("round trip from nodes 1.." + std::to_string(p.k), round_trip);
  rep.timings.push_back({"encode", clock.ms()});
  return rep;
}

Report cmd_decode(const fs::path& dir, const fs::path& output, const NodeSet& nodes) {
  Stopwatch clock;
  Report rep;
  rep.command = "decode";
  const Manifest m = read_manifest(dir);
  const Field field = Field::create(m.field);
  const Codec codec(m.variant, m.params, field);
  rep.config = m.to_json();

  NodeSet use = nodes;
  if (use.empty()) {
    for (const auto& e : m.nodes) {
      if (use.size() < m.params.k && usable(dir, e)) use.push_back(e.node);
    }
  }
  if (use.size() < m.params.k) {
    throw Error(Errc::TooFewShards, "only " + std::to_string(use.size()) + " usable shards, need k = " +
                                        std::to_string(m.params.k));
  }
  std::vector<ShardFile> shards;
  for (NodeId j : use) {
    const auto& e = m.entry(j);
    if (!fs::exists(dir / e.file)) throw Error(Errc::MissingShard, "shard file for node " + std::to_string(j) + " missing");
    shards.push_back(read_shard(dir / e.file, field));
    check_shard_against(shards.back(), m, j);
  }
  std::vector<FieldElem> symbols;
  std::vector<ShardVector> gen;
  for (std::uint64_t g = 0; g < m.generations; ++g) {
    gen.clear();
    for (const auto& s : shards) gen.push_back(generation_slice(s, g));
    const auto v = codec.reconstruct(gen);
    symbols.insert(symbols.end(), v.begin(), v.end());
  }
  const auto bytes = unpack_bytes(field, symbols);
  if (bytes.size() != m.input_bytes) throw Error(Errc::CorruptShard, "decoded length disagrees with the manifest");
  write_file(output, bytes);
  rep.log.push_back("decoded " + std::to_string(bytes.size()) + " bytes from nodes " + format_set(use) + " to " +
                    output.string());
  rep.check("decoded length matches manifest", true, std::to_string(bytes.size()) + " bytes");
  rep.timings.push_back({"decode", clock.ms()});
  return rep;
}

Report cmd_repair(const fs::path& dir, NodeSet group, NodeSet helpers) {
  Stopwatch clock;
  Report rep;
  rep.command = "repair";
  Manifest m = read_manifest(dir);
  const auto& p = m.params;
  const Field field = Field::create(m.field);
  const Codec codec(m.variant, p, field);
  rep.config = m.to_json();
  if (group.empty()) throw Error(Errc::InvalidConfig, "repair needs --group");
  std::sort(group.begin(), group.end());
  if (helpers.empty()) {
    for (const auto& e : m.nodes) {
      if (helpers.size() < p.d && std::find(group.begin(), group.end(), e.node) == group.end() && usable(dir, e)) {
        helpers.push_back(e.node);
      }
    }
  }
  const RepairContext ctx{group, helpers};
  ctx.validate(p);

  // Take the failed nodes offline first so the state on disk is inspectable.
  const fs::path failed_dir = dir / "failed";
  fs::create_directories(failed_dir);
  std::set<NodeId> have_original;
  for (NodeId f : group) {
    auto& e = m.entry(f);
    if (fs::exists(dir / e.file)) {
      fs::rename(dir / e.file, failed_dir / e.file);
      have_original.insert(f);
    } else if (fs::exists(failed_dir / e.file)) {
      have_original.insert(f);
    }
    e.status = "failed";
  }
  write_manifest(dir, m);

  std::vector<ShardFile> helper_files;
  for (NodeId h : helpers) {
    const auto& e = m.entry(h);
    if (e.status == "failed" || !fs::exists(dir / e.file)) {
      throw Error(Errc::MissingShard, "helper shard for node " + std::to_string(h) + " is not available");
    }
    helper_files.push_back(read_shard(dir / e.file, field));
    check_shard_against(helper_files.back(), m, h);
  }

  std::map<NodeId, ShardFile> rebuilt;
  for (NodeId f : group) {
    ShardFile s;
    s.header = helper_files.front().header;
    s.header.node = f;
    rebuilt[f] = s;
  }
  const std::size_t want1 = std::size_t{p.t} * p.d * p.beta;
  const std::size_t want2 = std::size_t{p.t} * (p.t - 1) * p.beta_prime;
  std::size_t bad_generations = 0;
  std::size_t phase1 = 0;
  std::size_t phase2 = 0;
  std::vector<ShardVector> surviving;
  for (std::uint64_t g = 0; g < m.generations; ++g) {
    surviving.clear();
    for (const auto& h : helper_files) surviving.push_back(generation_slice(h, g));
    RepairTranscript tr;
    for (const auto& s : codec.repair(ctx, surviving, &tr)) {
      auto& payload = rebuilt.at(s.node).payload;
      payload.insert(payload.end(), s.symbols.begin(), s.symbols.end());
    }
    if (g == 0) {
      phase1 = tr.phase1_symbols;
      phase2 = tr.phase2_symbols;
    }
    if (tr.phase1_symbols != want1 || tr.phase2_symbols != want2) ++bad_generations;
  }
  rep.log.push_back("repair " + ctx.to_string() + " over " + std::to_string(m.generations) + " generations");
  rep.log.push_back("per generation: phase-1 " + std::to_string(phase1) + " symbols, phase-2 " +
                    std::to_string(phase2) + " symbols, total " + std::to_string(phase1 + phase2));
  rep.extra["transfers_per_generation"] = {{"phase1", phase1}, {"phase2", phase2}, {"total", phase1 + phase2}};
  rep.check("phase-1 transfers = t*d*beta = " + std::to_string(want1) + " per generation", bad_generations == 0 &&
                                                                                            phase1 == want1);
  rep.check("phase-2 transfers = t(t-1)*beta' = " + std::to_string(want2) + " per generation",
            bad_generations == 0 && phase2 == want2);

  for (auto& [f, shard] : rebuilt) {
    auto& e = m.entry(f);
    write_shard(dir / e.file, shard);
    e.status = "repaired";
    if (have_original.count(f)) {
      const bool same = read_file(dir / e.file) == read_file(failed_dir / e.file);
      rep.check("node " + std::to_string(f) + " byte-identical to the failed copy", same);
    } else {
      rep.log.push_back("node " + std::to_string(f) + ": no failed copy to compare against");
    }
  }
  write_manifest(dir, m);
  rep.timings.push_back({"repair", clock.ms()});
  return rep;
}

Report cmd_attack(const ExperimentConfig& cfg) {
  Stopwatch clock;
  Report rep;
  rep.command = "attack";
  rep.config = cfg.to_json();
  SymbolRng rng(cfg.seed);
  const Field& f = cfg.field;
  if (cfg.variant == Variant::CodeA) {
    const auto p = code_a_init(cfg.params.d, f, resolve_omega(cfg));
    rep.config["omega"] = p.omega.value;
    const auto a = rng.draw(f, p.alpha);
    const auto b = rng.draw(f, p.alpha);
    rep.log.push_back("code-a d=" + std::to_string(p.d) + " over " + f.describe() + ", omega=" + f.format(p.omega) +
                      ", condition=" + f.format(p.condition));
    for (unsigned j = 1; j <= p.d; ++j) {
      const auto res = code_a_attack(p, j, a, b);
      const bool exact = res.a == a && res.b == b;
      const std::string line = "parity " + std::to_string(j) + ": recovered: " + (exact ? "EXACT" : "MISMATCH") +
                               ", leaked " + std::to_string(res.leaked_symbols) + "/" + std::to_string(p.params.B) +
                               " symbols";
      rep.log.push_back(line);
      rep.attacks.push_back({{"variant", "code-a"},
                             {"parity", j},
                             {"original", {{"a", symbols_json(f, a)}, {"b", symbols_json(f, b)}}},
                             {"recovered", {{"a", symbols_json(f, res.a)}, {"b", symbols_json(f, res.b)}}},
                             {"exact", exact},
                             {"leaked_symbols", res.leaked_symbols},
                             {"leaked_bits", bits_json(res.leaked_symbols, f.order())},
                             {"B", p.params.B},
                             {"observations", observations_json(res.observations)}});
      rep.check("code-a attack via parity " + std::to_string(j) + " recovers (a, b)", exact, line);
      rep.check("code-a leakage via parity " + std::to_string(j) + " is B", res.leaked_symbols == p.params.B,
                std::to_string(res.leaked_symbols) + " symbols");
    }
  } else if (cfg.variant == Variant::CodeB) {
    const auto& p = cfg.params;
    const auto code = CodeB::create(p.n, p.k, p.t, f);
    const auto vec = rng.draw(f, p.B);
    const Mat data = Mat::from_elems(f, p.t, p.k, vec);
    const auto res = code_b_attack(code, data);
    const bool exact = res.recovered == data;
    const std::string line = std::string("recovered: ") + (exact ? "EXACT" : "MISMATCH") + ", leaked " +
                             std::to_string(res.leaked_symbols) + "/" + std::to_string(p.B) + " symbols";
    rep.log.push_back("code-b " + p.to_string() + " over " + f.describe() + ", eavesdropper on node " +
                      std::to_string(p.t));
    for (const auto& ctx : res.contexts) rep.log.push_back("  context " + ctx.to_string());
    rep.log.push_back(line);
    auto contexts = nlohmann::json::array();
    for (const auto& ctx : res.contexts) contexts.push_back(ctx.to_string());
    rep.attacks.push_back({{"variant", "code-b"},
                           {"target", p.t},
                           {"contexts", contexts},
                           {"original", symbols_json(f, vec)},
                           {"recovered", symbols_json(f, res.recovered.entries())},
                           {"exact", exact},
                           {"leaked_symbols", res.leaked_symbols},
                           {"leaked_bits", bits_json(res.leaked_symbols, f.order())},
                           {"B", p.B},
                           {"observations", observations_json(res.observations)}});
    rep.check("code-b attack recovers M from node " + std::to_string(p.t) + "'s downloads", exact, line);
  } else {
    throw Error(Errc::InvalidConfig, "attack needs --variant code-a or code-b");
  }
  rep.extra["rng_draws"] = rng.draws();
  rep.timings.push_back({"attack", clock.ms()});
  return rep;
}

Report cmd_sweep(const ExperimentConfig& cfg) {
  Stopwatch clock;
  Report rep;
  rep.command = "sweep";
  rep.config = cfg.to_json();
  const auto model = make_model(cfg);
  const bool measured_only = cfg.variant != Variant::Stable;
  SymbolRng rng(cfg.seed);
  rep.log.push_back(model->name() + " " + cfg.params.to_string() + " over " + cfg.field.describe() +
                    (measured_only ? " (measured only)" : ""));
  for (const auto& [l1, l2] : sweep_pairs(cfg)) {
    bool sampled = false;
    const auto eves = placements_for(cfg, *model, l1, l2, rng, sampled);
    if (eves.empty()) continue;
    CapacityRow row;
    row.l1 = l1;
    row.l2 = l2;
    row.placements = eves.size();
    row.measured_only = measured_only;
    if (!measured_only) row.predicted = predicted_secrecy_capacity(cfg.params, l1, l2);
    row.measured_min = SIZE_MAX;
    std::vector<std::string> at_min;
    for (const auto& e : eves) {
      const auto lr = measure_leakage(*model, e);
      nlohmann::json pj = eve_json(e);
      pj["l1"] = l1;
      pj["l2"] = l2;
      pj["leaked"] = lr.leaked_symbols;
      pj["leaked_bits"] = bits_json(lr.leaked_symbols, cfg.field.order());
      pj["measured"] = lr.measured_capacity;
      if (row.predicted) {
        pj["predicted"] = *row.predicted;
      } else {
        pj["predicted"] = "not-covered";
      }
      rep.placements.push_back(pj);
      if (lr.measured_capacity < row.measured_min) at_min.clear();
      row.measured_min = std::min(row.measured_min, lr.measured_capacity);
      row.measured_max = std::max(row.measured_max, lr.measured_capacity);
      if (lr.measured_capacity == row.measured_min) at_min.push_back("E=" + format_set(e.E) + " F=" + format_set(e.F));
    }
    if (sampled) rep.log.push_back("(" + std::to_string(l1) + "," + std::to_string(l2) + "): sampled placements");
    if (measured_only && row.measured_min != row.measured_max) {
      std::string where;
      for (std::size_t i = 0; i < at_min.size() && i < 6; ++i) where += (i ? ", " : "") + at_min[i];
      if (at_min.size() > 6) where += ", ...";
      rep.log.push_back("(" + std::to_string(l1) + "," + std::to_string(l2) + "): capacity " +
                        std::to_string(row.measured_min) + " at " + where);
    }
    rep.capacity.push_back(row);
  }
  if (rep.capacity.empty()) rep.log.push_back("empty sweep range");
  rep.timings.push_back({"sweep", clock.ms()});
  return rep;
}

Report cmd_verify(const ExperimentConfig& cfg) {
  Stopwatch clock;
  Report rep;
  rep.command = "verify";
  rep.config = cfg.to_json();
  const auto model = make_model(cfg);
  rep.log.push_back(model->name() + " " + cfg.params.to_string() + " over " + cfg.field.describe());
  stability_check(rep, *model);
  rep.timings.push_back({"stability", clock.ms()});
  if (cfg.variant != Variant::CodeA) {
    lemma_rows(rep, lemma_suite(*model));
    rep.timings.push_back({"lemmas", clock.ms()});
  }
  if (cfg.variant == Variant::Stable) {
    lemma_rows(rep, placement_verifications(*model));
    rep.timings.push_back({"placement verifications", clock.ms()});
    entropy_oracle_checks(rep, cfg.params, cfg.field);
    rep.timings.push_back({"entropy oracle", clock.ms()});
  }
  bandwidth_check(rep, cfg.params);
  return rep;
}

Report cmd_secure_verify(const ExperimentConfig& cfg) {
  Stopwatch clock;
  Report rep;
  rep.command = "secure-verify";
  rep.config = cfg.to_json();
  if (cfg.variant != Variant::Stable) throw Error(Errc::InvalidConfig, "secure-verify needs the stable variant");
  const Range r1 = cfg.l1.value_or(Range{1, 1});
  const Range r2 = cfg.l2.value_or(Range{1, 1});
  if (!r1.single() || !r2.single()) throw Error(Errc::InvalidConfig, "secure-verify takes a single --l1 and --l2");
  const auto& p = cfg.params;
  const auto code = StableCode::create(p.n, p.k, p.t, cfg.field);
  const auto scheme = scheme_create(code, r1.lo, r2.lo, cfg.secret_len);
  const auto predicted = predicted_secrecy_capacity(p, r1.lo, r2.lo);
  rep.log.push_back("precoding over " + scheme.ext.describe());
  rep.log.push_back("secret " + std::to_string(scheme.secret_len) + " + random " + std::to_string(scheme.random_len) +
                    " extension symbols; predicted capacity " + std::to_string(*predicted));
  rep.extra["tower"] = scheme.ext.describe();
  rep.extra["secret_len"] = scheme.secret_len;
  rep.extra["random_len"] = scheme.random_len;
  rep.extra["predicted_capacity"] = *predicted;
  rep.timings.push_back({"scheme", clock.ms()});

  SymbolRng rng(cfg.seed);
  const auto secret = rng.draw(scheme.ext, scheme.secret_len);
  const auto randomness = rng.draw(scheme.ext, scheme.random_len);
  rep.extra["rng_draws"] = rng.draws();
  const auto shards = secure_encode(scheme, secret, randomness);
  std::size_t recovered = 0;
  std::size_t subsets = 0;
  NodeSet all;
  for (NodeId j = 1; j <= p.n; ++j) all.push_back(j);
  for (const auto& sub : combinations(all, p.k)) {
    std::vector<ShardVector> pick;
    for (NodeId j : sub) pick.push_back(shards[j - 1]);
    ++subsets;
    if (secure_decode(scheme, pick) == secret) ++recovered;
  }
  rep.check("secret recoverable from every k-subset", recovered == subsets,
            std::to_string(recovered) + "/" + std::to_string(subsets));
  rep.timings.push_back({"recovery", clock.ms()});

  std::vector<EveModel> eves;
  if (!cfg.placements.empty()) {
    for (const auto& pl : cfg.placements) eves.push_back(EveModel::make(p, pl.E, pl.F));
  } else {
    eves = all_placements(p, r1.lo, r2.lo);
  }
  std::size_t secure = 0;
  std::string first_leak;
  for (const auto& e : eves) {
    const auto chk = verify_secrecy(scheme, e);
    nlohmann::json pj = eve_json(e);
    pj["leak_rank"] = chk.leak_rank;
    pj["random_rank"] = chk.random_rank;
    pj["random_residual"] = chk.random_residual;
    pj["mutual_information"] = chk.mutual_information;
    pj["mutual_information_bits"] = bits_json(chk.mutual_information, scheme.base_code.field().order());
    pj["pass"] = chk.pass();
    rep.placements.push_back(pj);
    if (chk.pass()) {
      ++secure;
    } else if (first_leak.empty()) {
      first_leak = chk.describe();
      rep.log.push_back("leak: " + first_leak);
    }
  }
  std::string detail = std::to_string(secure) + "/" + std::to_string(eves.size()) + " placements";
  if (!first_leak.empty()) detail += "; " + first_leak;
  rep.check("I(secret; leakage) = 0", secure == eves.size(), detail);
  rep.timings.push_back({"secrecy", clock.ms()});
  return rep;
}

}  // namespace coopstore::cli
