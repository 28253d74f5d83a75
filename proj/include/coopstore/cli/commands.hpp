#pragma once

#include <filesystem>

#include "coopstore/cli/config.hpp"
#include "coopstore/cli/report.hpp"
#include "coopstore/field.hpp"

namespace coopstore::cli {

// Each command returns a report; the process exit code is report.exit_code().
// Library errors propagate as coopstore::Error and map to exit code 2.

/// Writes n shard files and manifest.json into `out_dir`. Stable and code-b only.
Report cmd_encode(const ExperimentConfig& cfg, const std::filesystem::path& input, const std::filesystem::path& out_dir);

/// Rebuilds the input from `nodes` (default: the first k usable shards).
Report cmd_decode(const std::filesystem::path& shard_dir, const std::filesystem::path& output, const NodeSet& nodes);

/// Moves the group's shards to failed/, regenerates them from the helpers and
/// compares the result byte-for-byte against the moved copies. Empty helpers
/// pick the lowest d usable ids outside the group.
Report cmd_repair(const std::filesystem::path& shard_dir, NodeSet group, NodeSet helpers);

/// Code-A or Code-B eavesdropping attack on a seeded random message.
Report cmd_attack(const ExperimentConfig& cfg);

/// Measured vs predicted secrecy capacity over (l1, l2) and eavesdropper placements.
Report cmd_sweep(const ExperimentConfig& cfg);

/// Lemma suite, placement verifications, stability, entropy oracle and bandwidth.
Report cmd_verify(const ExperimentConfig& cfg);

/// Builds the precoded scheme for a single (l1, l2) and checks secrecy and recovery.
Report cmd_secure_verify(const ExperimentConfig& cfg);

/// cfg.omega if set, else the smallest admissible generator for Code-A.
FieldElem resolve_omega(const ExperimentConfig& cfg);

}  // namespace coopstore::cli
