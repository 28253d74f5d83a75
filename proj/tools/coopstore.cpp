#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coopstore/cli/commands.hpp"
#include "coopstore/cli/shard_file.hpp"
#include "coopstore/error.hpp"

namespace {

using coopstore::cli::ConfigOverrides;
using coopstore::cli::Report;

struct Outputs {
  std::string report_path;
  std::string csv_path;
  bool json = false;
};

struct ExperimentFlags {
  std::string config_path;
  ConfigOverrides ov;
};

void add_experiment_flags(CLI::App* cmd, ExperimentFlags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file");
  cmd->add_option("--params", f.ov.params, "n=6,k=3,d=3,t=2 (code-a: d=3)");
  cmd->add_option("--field", f.ov.field, "p=11, m=4 or m=4,poly=0x13");
  cmd->add_option("--variant", f.ov.variant, "stable, code-a or code-b");
  cmd->add_option("--seed", f.ov.seed, "PRNG seed (fallback: COOPSTORE_SEED)");
  cmd->add_option("--omega", f.ov.omega, "Code-A multiplier (raw field value)");
  cmd->add_option("--l1", f.ov.l1, "nodes whose content leaks: N or LO:HI");
  cmd->add_option("--l2", f.ov.l2, "nodes whose repair downloads leak: N or LO:HI");
  cmd->add_option("--group", f.ov.group, "failed group, e.g. 1,2");
  cmd->add_option("--helpers", f.ov.helpers, "helper set, e.g. 3,4,5");
  cmd->add_option("--eve", f.ov.placements, "placement \"E=1;F=2\" (repeatable)");
  cmd->add_option("--secret-len", f.ov.secret_len, "override the secret length (negative controls)");
}

void add_outputs(CLI::App* cmd, Outputs& o) {
  cmd->add_option("--report", o.report_path, "write the JSON report here");
  cmd->add_option("--csv", o.csv_path, "write the capacity table as CSV here");
  cmd->add_flag("--json", o.json, "print the JSON report instead of the text table");
}

coopstore::cli::ExperimentConfig load(const ExperimentFlags& f) {
  std::optional<std::filesystem::path> file;
  if (!f.config_path.empty()) file = f.config_path;
  return coopstore::cli::load_config(file, f.ov);
}

int emit(const Report& rep, const Outputs& o) {
  if (!o.report_path.empty()) {
    const std::string text = rep.to_json().dump(2) + "\n";
    coopstore::cli::write_file(o.report_path, {text.begin(), text.end()});
  }
  if (!o.csv_path.empty()) {
    const std::string csv = rep.capacity_csv();
    coopstore::cli::write_file(o.csv_path, {csv.begin(), csv.end()});
  }
  if (o.json) {
    std::cout << rep.to_json().dump(2) << '\n';
  } else {
    std::cout << rep.to_text();
  }
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coopstore: stable cooperative regenerating codes, eavesdroppers and secure precoding"};
  app.require_subcommand(1);
  Outputs out;

  ExperimentFlags encode_flags;
  std::string input;
  std::string out_dir;
  auto* encode = app.add_subcommand("encode", "stripe and encode a file into n shard files");
  encode->add_option("--input", input, "file to encode")->required();
  encode->add_option("--out", out_dir, "directory for shards and manifest.json")->required();
  add_experiment_flags(encode, encode_flags);
  add_outputs(encode, out);

  std::string decode_dir;
  std::string decode_output;
  std::string decode_nodes;
  auto* decode = app.add_subcommand("decode", "rebuild the original file from k shards");
  decode->add_option("--shards", decode_dir, "shard directory")->required();
  decode->add_option("--output", decode_output, "where to write the file")->required();
  decode->add_option("--nodes", decode_nodes, "nodes to read, e.g. 2,4,6");
  add_outputs(decode, out);

  ExperimentFlags repair_flags;
  std::string repair_dir;
  auto* repair = app.add_subcommand("repair", "fail a group and regenerate it cooperatively");
  repair->add_option("--shards", repair_dir, "shard directory")->required();
  repair->add_option("--config", repair_flags.config_path, "JSON config supplying group/helpers");
  repair->add_option("--group", repair_flags.ov.group, "failed group, e.g. 1,2");
  repair->add_option("--helpers", repair_flags.ov.helpers, "helper set, e.g. 3,4,5");
  add_outputs(repair, out);

  ExperimentFlags attack_flags;
  auto* attack = app.add_subcommand("attack", "run the Code-A or Code-B eavesdropping attack");
  add_experiment_flags(attack, attack_flags);
  add_outputs(attack, out);

  ExperimentFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "secrecy capacity table, measured vs predicted");
  add_experiment_flags(sweep, sweep_flags);
  add_outputs(sweep, out);

  ExperimentFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "lemma suite, stability, entropy oracle and bandwidth");
  add_experiment_flags(verify, verify_flags);
  add_outputs(verify, out);

  ExperimentFlags secure_flags;
  auto* secure = app.add_subcommand("secure-verify", "precoded scheme: secrecy and recovery checks");
  add_experiment_flags(secure, secure_flags);
  add_outputs(secure, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*encode) return emit(coopstore::cli::cmd_encode(load(encode_flags), input, out_dir), out);
    if (*decode) {
      return emit(coopstore::cli::cmd_decode(decode_dir, decode_output, coopstore::cli::parse_node_list(decode_nodes)),
                  out);
    }
    if (*repair) {
      coopstore::NodeSet group;
      coopstore::NodeSet helpers;
      if (!repair_flags.config_path.empty()) {
        // Only group and helpers are read; code parameters come from the manifest.
        const auto cfg = load(repair_flags);
        group = cfg.group;
        helpers = cfg.helpers;
      } else {
        if (repair_flags.ov.group) group = coopstore::cli::parse_node_list(*repair_flags.ov.group);
        if (repair_flags.ov.helpers) helpers = coopstore::cli::parse_node_list(*repair_flags.ov.helpers);
      }
      return emit(coopstore::cli::cmd_repair(repair_dir, group, helpers), out);
    }
    if (*attack) return emit(coopstore::cli::cmd_attack(load(attack_flags)), out);
    if (*sweep) return emit(coopstore::cli::cmd_sweep(load(sweep_flags)), out);
    if (*verify) return emit(coopstore::cli::cmd_verify(load(verify_flags)), out);
    if (*secure) return emit(coopstore::cli::cmd_secure_verify(load(secure_flags)), out);
  } catch (const coopstore::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
