#include "coopstore/stable_code.hpp"

#include <algorithm>
#include <map>

#include "coopstore/error.hpp"

namespace coopstore {

StableCode StableCode::create(unsigned n, unsigned k, unsigned t, const Field& field) {
  const CodeParams p = CodeParams::mscr(n, k, k, t, field.order());
  p.validate_stable();
  const auto pts = default_points(field, n);
  return StableCode(p, field, vandermonde(field, pts, k), systematic_superregular(t, n, field));
}

void StableCode::check_node(NodeId id) const {
  if (id < 1 || id > params_.n) throw Error(Errc::InvalidContext, "node " + std::to_string(id) + " outside [1, n]");
}

Mat StableCode::data_from_vec(std::span<const FieldElem> v) const {
  if (v.size() != params_.B) throw Error(Errc::DimensionMismatch, "message vector must have length B");
  return Mat::from_elems(field_, params_.t, params_.k, {v.begin(), v.end()});
}

std::vector<FieldElem> StableCode::vec_from_data(const Mat& data) const {
  if (data.rows() != params_.t || data.cols() != params_.k) {
    throw Error(Errc::DimensionMismatch, "data matrix must be t×k");
  }
  return data.entries();
}

std::vector<ShardVector> StableCode::encode(const Mat& data) const {
  if (data.rows() != params_.t || data.cols() != params_.k || !(data.field() == field_)) {
    throw Error(Errc::DimensionMismatch, "encode expects a t×k matrix over " + field_.describe());
  }
  const Mat coded = data * G_;
  std::vector<ShardVector> out;
  for (NodeId j = 1; j <= params_.n; ++j) out.push_back({j, coded.column(j - 1)});
  return out;
}

FieldElem StableCode::repair_symbol(const ShardVector& helper, NodeId failed) const {
  check_node(helper.node);
  check_node(failed);
  if (helper.node == failed) throw Error(Errc::SelfRepair, "node " + std::to_string(failed) + " cannot help itself");
  if (helper.symbols.size() != params_.alpha) throw Error(Errc::DimensionMismatch, "shard has wrong symbol count");
  FieldElem acc = field_.zero();
  for (unsigned i = 0; i < params_.t; ++i) acc = field_.add(acc, field_.mul(helper.symbols[i], Gp_.at(i, failed - 1)));
  return acc;
}

std::vector<FieldElem> StableCode::repair_functional(NodeId helper, NodeId failed) const {
  check_node(helper);
  check_node(failed);
  if (helper == failed) throw Error(Errc::SelfRepair, "node " + std::to_string(failed) + " cannot help itself");
  std::vector<FieldElem> row(params_.B);
  for (unsigned i = 0; i < params_.t; ++i) {
    for (unsigned c = 0; c < params_.k; ++c) {
      row[i * params_.k + c] = field_.mul(Gp_.at(i, failed - 1), G_.at(c, helper - 1));
    }
  }
  return row;
}

std::vector<FieldElem> StableCode::exchange_functional(NodeId from, NodeId to) const {
  // m'_fromᵀ g_to has the same shape as the repair functional with roles swapped.
  return repair_functional(to, from);
}

Mat StableCode::storage_functionals(NodeId node) const {
  check_node(node);
  Mat out(field_, params_.alpha, params_.B);
  for (unsigned i = 0; i < params_.t; ++i) {
    for (unsigned c = 0; c < params_.k; ++c) out.set(i, i * params_.k + c, G_.at(c, node - 1));
  }
  return out;
}

std::vector<ShardVector> StableCode::cooperative_repair(const RepairContext& ctx,
                                                        std::span<const ShardVector> surviving,
                                                        RepairTranscript* transcript) const {
  ctx.validate(params_);
  std::map<NodeId, const ShardVector*> by_id;
  for (const auto& s : surviving) by_id[s.node] = &s;
  std::vector<const ShardVector*> helper_shards;
  std::vector<std::size_t> helper_cols;
  for (NodeId h : ctx.helpers) {
    auto it = by_id.find(h);
    if (it == by_id.end()) throw Error(Errc::MissingShard, "helper shard " + std::to_string(h) + " not available");
    helper_shards.push_back(it->second);
    helper_cols.push_back(h - 1);
  }
  const std::size_t t = params_.t;
  const Mat gd_inv = invert(G_.select_cols(helper_cols));

  // Phase 1: each f_j solves m'_{f_j}ᵀ from d helper symbols.
  std::vector<Mat> m_prime;  // 1×k rows
  for (NodeId f : ctx.group) {
    std::vector<FieldElem> s;
    for (const auto* h : helper_shards) {
      const FieldElem sym = repair_symbol(*h, f);
      s.push_back(sym);
      if (transcript) {
        transcript->records.push_back({h->node, f, 1, sym});
        ++transcript->phase1_symbols;
      }
    }
    m_prime.push_back(Mat::row_vector(field_, s) * gd_inv);
  }

  // Phase 2: f_j sends m'_{f_j}ᵀ g_{f_i}; vals(i, j) is what f_i holds from f_j.
  Mat vals(field_, t, t);
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < t; ++i) {
      const std::size_t col[] = {ctx.group[i] - 1u};
      const FieldElem sym = (m_prime[j] * G_.select_cols(col)).at(0, 0);
      vals.set(i, j, sym);
      if (i != j && transcript) {
        transcript->records.push_back({ctx.group[j], ctx.group[i], 2, sym});
        ++transcript->phase2_symbols;
      }
    }
  }

  // Phase 3: Gp_Cᵀ w = vals(i, ·) gives w = M g_{f_i}.
  std::vector<std::size_t> group_cols;
  for (NodeId f : ctx.group) group_cols.push_back(f - 1);
  const Mat solve = invert(Gp_.select_cols(group_cols).transpose());
  std::vector<ShardVector> out;
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<FieldElem> rhs(vals.row(i).begin(), vals.row(i).end());
    const Mat w = solve * Mat::column_vector(field_, rhs);
    out.push_back({ctx.group[i], w.column(0)});
  }
  return out;
}

Mat StableCode::reconstruct(std::span<const ShardVector> shards) const {
  std::vector<NodeId> ids;
  for (const auto& s : shards) {
    check_node(s.node);
    if (std::find(ids.begin(), ids.end(), s.node) != ids.end()) {
      throw Error(Errc::DuplicateNode, "node " + std::to_string(s.node) + " supplied twice");
    }
    ids.push_back(s.node);
  }
  if (shards.size() < params_.k) {
    throw Error(Errc::TooFewShards, "need " + std::to_string(params_.k) + " shards, got " + std::to_string(shards.size()));
  }
  Mat y(field_, params_.t, params_.k);
  std::vector<std::size_t> cols;
  for (unsigned c = 0; c < params_.k; ++c) {
    const auto& s = shards[c];
    if (s.symbols.size() != params_.alpha) throw Error(Errc::DimensionMismatch, "shard has wrong symbol count");
    for (unsigned i = 0; i < params_.t; ++i) y.set(i, c, s.symbols[i]);
    cols.push_back(s.node - 1);
  }
  return y * invert(G_.select_cols(cols));
}

StableCode StableCode::lift_to(const Field& ext) const {
  CodeParams p = params_;
  p.q = ext.order();
  return StableCode(p, ext, G_.lift(ext), Gp_.lift(ext));
}

std::vector<Transfer> StableRepairModel::transfers(const RepairContext& ctx) const {
  const auto& p = code_.params();
  const Field& f = code_.field();
  std::vector<Transfer> out;
  std::vector<FieldElem> unit(p.B, f.zero());
  for (unsigned b = 0; b < p.B; ++b) {
    unit.assign(p.B, f.zero());
    unit[b] = f.one();
    const auto shards = code_.encode(code_.data_from_vec(unit));
    RepairTranscript tr;
    code_.cooperative_repair(ctx, shards, &tr);
    if (b == 0) {
      for (const auto& rec : tr.records) {
        const std::string tag = rec.phase == 1 ? "S_" : "Sx_";
        out.push_back({rec.from, rec.to, rec.phase, std::vector<FieldElem>(p.B, f.zero()),
                       tag + std::to_string(rec.from) + "^" + std::to_string(rec.to)});
      }
    }
    for (std::size_t r = 0; r < tr.records.size(); ++r) out[r].row[b] = tr.records[r].symbol;
  }
  return out;
}

RepairContext canonical_context(const CodeParams& p, NodeId helper, NodeId failed) {
  if (helper == failed) throw Error(Errc::SelfRepair, "helper equals failed node");
  NodeSet group{failed};
  for (NodeId id = 1; id <= p.n && group.size() < p.t; ++id) {
    if (id != failed && id != helper) group.push_back(id);
  }
  std::sort(group.begin(), group.end());
  NodeSet helpers{helper};
  for (NodeId id = 1; id <= p.n && helpers.size() < p.d; ++id) {
    if (id != helper && std::find(group.begin(), group.end(), id) == group.end()) helpers.push_back(id);
  }
  std::sort(helpers.begin(), helpers.end());
  RepairContext ctx{group, helpers};
  ctx.validate(p);
  return ctx;
}

}  // namespace coopstore
