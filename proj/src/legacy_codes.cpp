#include "coopstore/legacy_codes.hpp"

#include <algorithm>
#include <map>

#include "coopstore/error.hpp"

namespace coopstore {

namespace {

std::vector<FieldElem> ones(const Field& f, std::size_t n) { return std::vector<FieldElem>(n, f.one()); }

// zᵀ·D for diagonal D.
std::vector<FieldElem> z_times(const Mat& diag) {
  std::vector<FieldElem> out(diag.rows());
  for (std::size_t r = 0; r < diag.rows(); ++r) out[r] = diag.at(r, r);
  return out;
}

Mat diag_inverse(const Mat& diag) {
  Mat out = diag;
  for (std::size_t r = 0; r < diag.rows(); ++r) out.set(r, r, diag.field().inv(diag.at(r, r)));
  return out;
}

std::vector<FieldElem> concat(std::span<const FieldElem> x, std::span<const FieldElem> y) {
  std::vector<FieldElem> out(x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

FieldElem dot(const Field& f, std::span<const FieldElem> x, std::span<const FieldElem> y) {
  FieldElem acc = f.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
  return acc;
}

std::string group_tag(NodeId other) { return "(1," + std::to_string(other) + ")"; }

}  // namespace

FieldElem code_a_condition(const Field& field, FieldElem omega, unsigned alpha) {
  FieldElem sum = field.zero();
  for (unsigned i = 0; i < alpha; ++i) sum = field.add(sum, field.pow(omega, i));
  const FieldElem sq = field.mul(sum, sum);
  return field.mul(sq, field.inv(field.pow(omega, alpha - 1)));
}

CodeAParams code_a_unchecked(unsigned d, const Field& field, FieldElem omega) {
  if (d < 2) throw Error(Errc::InvalidParams, "Code-A needs d >= 2");
  CodeAParams p;
  p.d = d;
  p.n = d + 2;
  p.alpha = d;
  p.field = field;
  p.omega = omega;
  p.condition = code_a_condition(field, omega, p.alpha);
  for (unsigned i = 1; i <= d; ++i) {
    Mat b(field, p.alpha, p.alpha);
    for (unsigned r = 0; r < p.alpha; ++r) b.set(r, r, field.pow(omega, (i - 1 + r) % p.alpha));
    p.Bdiag.push_back(std::move(b));
  }
  p.params = CodeParams::mscr(p.n, 2, d, 2, field.order());
  return p;
}

CodeAParams code_a_init(unsigned d, const Field& field, FieldElem omega) {
  if (d < 2) throw Error(Errc::InvalidParams, "Code-A needs d >= 2");
  if (field.order() <= d + 1) {
    throw Error(Errc::FieldTooSmall, "Code-A needs q > n - 1 = " + std::to_string(d + 1) + ", got q=" +
                                         std::to_string(field.order()));
  }
  if (!field.is_generator(omega)) {
    throw Error(Errc::NotGenerator, field.format(omega) + " does not generate the multiplicative group of " +
                                        field.describe());
  }
  CodeAParams p = code_a_unchecked(d, field, omega);
  const FieldElem a = field.scalar(p.alpha);
  if (p.condition == field.zero() || p.condition == field.mul(a, a)) {
    throw Error(Errc::InadmissibleOmega, "condition value " + field.format(p.condition) + " lies in {0, " +
                                             field.format(field.mul(a, a)) + "} for omega=" + field.format(omega));
  }
  return p;
}

std::vector<ShardVector> code_a_encode(const CodeAParams& p, std::span<const FieldElem> a,
                                       std::span<const FieldElem> b) {
  if (a.size() != p.alpha || b.size() != p.alpha) throw Error(Errc::DimensionMismatch, "a and b must have length alpha");
  std::vector<ShardVector> out;
  out.push_back({1, {a.begin(), a.end()}});
  out.push_back({2, {b.begin(), b.end()}});
  for (unsigned i = 1; i <= p.d; ++i) {
    std::vector<FieldElem> r(p.alpha);
    for (unsigned e = 0; e < p.alpha; ++e) r[e] = p.field.add(a[e], p.field.mul(p.B(i).at(e, e), b[e]));
    out.push_back({i + 2, r});
  }
  return out;
}

Mat code_a_storage_functionals(const CodeAParams& p, NodeId node) {
  if (node < 1 || node > p.n) throw Error(Errc::InvalidGroup, "node " + std::to_string(node) + " outside [1, n]");
  const Field& f = p.field;
  Mat out(f, p.alpha, 2 * p.alpha);
  for (unsigned r = 0; r < p.alpha; ++r) {
    if (node == 1) {
      out.set(r, r, f.one());
    } else if (node == 2) {
      out.set(r, p.alpha + r, f.one());
    } else {
      out.set(r, r, f.one());
      out.set(r, p.alpha + r, p.B(node - 2).at(r, r));
    }
  }
  return out;
}

ObservationSet code_a_repair_functionals(const CodeAParams& p, NodeId other) {
  if (other < 2 || other > p.n) {
    throw Error(Errc::InvalidGroup, "group (1," + std::to_string(other) + ") is not a Code-A group containing node 1");
  }
  const Field& f = p.field;
  ObservationSet obs(f, 2 * p.alpha);
  const auto z = ones(f, p.alpha);
  if (other == 2) {
    // Every parity row carries the same b-part zᵀ.
    for (unsigned j = 1; j <= p.d; ++j) {
      obs.add(concat(z_times(diag_inverse(p.B(j))), z), "S_" + std::to_string(j + 2) + "^1" + group_tag(other));
    }
    return obs;
  }
  const unsigned i = other - 2;
  const Mat& bi = p.B(i);
  obs.add(concat(std::vector<FieldElem>(p.alpha, f.zero()), z_times(bi)), "S_2^1" + group_tag(other));
  for (unsigned j = 1; j <= p.d; ++j) {
    if (j == i) continue;
    obs.add(concat(z_times(bi * diag_inverse(p.B(j))), z_times(bi)), "S_" + std::to_string(j + 2) + "^1" + group_tag(other));
  }
  return obs;
}

namespace {

Mat leakage_columns(const CodeAParams& p, unsigned j, bool inverse) {
  if (j < 1 || j > p.d) throw Error(Errc::InvalidGroup, "parity index outside [1, d]");
  std::vector<std::vector<FieldElem>> cols{ones(p.field, p.alpha)};
  for (unsigned i = 1; i <= p.d; ++i) {
    if (i != j) cols.push_back(z_times(inverse ? diag_inverse(p.B(i)) : p.B(i)));
  }
  Mat m(p.field, p.alpha, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (unsigned r = 0; r < p.alpha; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

}  // namespace

Mat code_a_inverse_system(const CodeAParams& p, unsigned j) { return leakage_columns(p, j, true); }
Mat code_a_leakage_matrix(const CodeAParams& p, unsigned j) { return leakage_columns(p, j, false); }

CodeAAttack code_a_attack(const CodeAParams& p, unsigned j, std::span<const FieldElem> a,
                          std::span<const FieldElem> b) {
  const Field& f = p.field;
  if (a.size() != p.alpha || b.size() != p.alpha) throw Error(Errc::DimensionMismatch, "a and b must have length alpha");
  const auto x = concat(a, b);
  const std::string sender = "S_" + std::to_string(j + 2) + "^1";

  // Parity j's symbol under group (1,2), then under (1,i+2) for i ≠ j.
  std::vector<FieldElem> y;
  std::vector<NodeId> groups{2};
  for (unsigned i = 1; i <= p.d; ++i) {
    if (i != j) groups.push_back(i + 2);
  }
  for (NodeId other : groups) {
    const auto obs = code_a_repair_functionals(p, other);
    for (std::size_t r = 0; r < obs.size(); ++r) {
      if (obs.labels()[r] == sender + group_tag(other)) y.push_back(dot(f, obs.rows().row(r), x));
    }
  }

  CodeAAttack res;
  res.leakage_matrix = code_a_leakage_matrix(p, j);
  Mat solve;
  try {
    solve = invert(res.leakage_matrix);
  } catch (const Error& e) {
    if (e.code() != Errc::Singular) throw;
    throw Error(Errc::SingularLeakageMatrix, "leakage matrix for parity " + std::to_string(j) +
                                                 " is singular (omega=" + f.format(p.omega) + ")");
  }
  // vᵀ = yᵀ · L⁻¹ (L the leakage matrix) with v = B_j⁻¹a + b; node 1's content supplies a.
  const Mat v = Mat::row_vector(f, y) * solve;
  const Mat bj_inv = diag_inverse(p.B(j));
  res.a.assign(a.begin(), a.end());
  res.b.resize(p.alpha);
  for (unsigned r = 0; r < p.alpha; ++r) res.b[r] = f.sub(v.at(0, r), f.mul(bj_inv.at(r, r), res.a[r]));

  const CodeARepairModel model(p);
  res.observations = ObservationSet(f, 2 * p.alpha);
  for (const auto& ctx : model.contexts_for(1)) {
    for (const auto& tr : model.downloads(ctx, 1)) {
      if (tr.phase == 0 && ctx.group[1] != 2) continue;  // granted rows once
      res.observations.add(tr.row, tr.label);
    }
  }
  res.leaked_symbols = entropy_symbols(res.observations);
  return res;
}

std::vector<RepairContext> CodeARepairModel::all_contexts() const { return contexts_for(1); }

std::vector<RepairContext> CodeARepairModel::contexts_for(NodeId node) const {
  if (node != 1) return {};
  std::vector<RepairContext> out;
  for (NodeId other = 2; other <= p_.n; ++other) {
    NodeSet group{1, other};
    out.push_back({group, complement(p_.n, group)});
  }
  return out;
}

std::vector<Transfer> CodeARepairModel::transfers(const RepairContext& ctx) const {
  if (ctx.group.size() != 2 || !ctx.in_group(1)) {
    throw Error(Errc::InvalidGroup, "Code-A repair is modeled only for groups containing node 1");
  }
  const NodeId other = ctx.group[0] == 1 ? ctx.group[1] : ctx.group[0];
  if (ctx.helpers != complement(p_.n, ctx.group)) throw Error(Errc::InvalidContext, "Code-A uses every surviving node");
  const auto obs = code_a_repair_functionals(p_, other);
  std::vector<Transfer> out;
  for (std::size_t r = 0; r < obs.size(); ++r) {
    const std::string& label = obs.labels()[r];
    const NodeId from = static_cast<NodeId>(std::stoul(label.substr(2, label.find('^') - 2)));
    const auto row = obs.rows().row(r);
    out.push_back({from, 1, 1, {row.begin(), row.end()}, label});
  }
  const Mat w1 = code_a_storage_functionals(p_, 1);
  for (std::size_t r = 0; r < w1.rows(); ++r) {
    const auto row = w1.row(r);
    out.push_back({1, 1, 0, {row.begin(), row.end()}, "W_1[granted][" + std::to_string(r) + "]"});
  }
  return out;
}

CodeB CodeB::create(unsigned n, unsigned k, unsigned t, const Field& field) {
  const CodeParams p = CodeParams::mscr(n, k, k, t, field.order());
  p.validate_stable();
  return CodeB(p, field, vandermonde(field, default_points(field, n), k));
}

std::vector<ShardVector> CodeB::encode(const Mat& data) const {
  if (data.rows() != params_.t || data.cols() != params_.k || !(data.field() == field_)) {
    throw Error(Errc::DimensionMismatch, "encode expects a t×k matrix over " + field_.describe());
  }
  const Mat coded = data * G_;
  std::vector<ShardVector> out;
  for (NodeId j = 1; j <= params_.n; ++j) out.push_back({j, coded.column(j - 1)});
  return out;
}

Mat CodeB::storage_functionals(NodeId node) const {
  if (node < 1 || node > params_.n) throw Error(Errc::InvalidContext, "node outside [1, n]");
  Mat out(field_, params_.alpha, params_.B);
  for (unsigned i = 0; i < params_.t; ++i) {
    for (unsigned c = 0; c < params_.k; ++c) out.set(i, i * params_.k + c, G_.at(c, node - 1));
  }
  return out;
}

void CodeB::check_context(const RepairContext& ctx) const {
  ctx.validate(params_);
  if (!std::is_sorted(ctx.group.begin(), ctx.group.end())) {
    throw Error(Errc::InvalidContext, "Code-B groups are ranked by id and must be sorted: " + ctx.to_string());
  }
}

std::vector<TransferRecord> CodeB::repair_data(const RepairContext& ctx, std::span<const ShardVector> shards) const {
  check_context(ctx);
  std::map<NodeId, const ShardVector*> by_id;
  for (const auto& s : shards) by_id[s.node] = &s;
  std::vector<TransferRecord> out;
  for (std::size_t j = 0; j < ctx.group.size(); ++j) {
    for (NodeId h : ctx.helpers) {
      auto it = by_id.find(h);
      if (it == by_id.end()) throw Error(Errc::MissingShard, "helper shard " + std::to_string(h) + " not available");
      out.push_back({h, ctx.group[j], 1, it->second->symbols.at(j)});
    }
  }
  return out;
}

std::vector<Transfer> CodeB::repair_functionals(const RepairContext& ctx) const {
  check_context(ctx);
  std::vector<Transfer> out;
  auto row_for = [this](std::size_t j, NodeId node) {
    std::vector<FieldElem> row(params_.B, field_.zero());
    for (unsigned c = 0; c < params_.k; ++c) row[j * params_.k + c] = G_.at(c, node - 1);
    return row;
  };
  for (std::size_t j = 0; j < ctx.group.size(); ++j) {
    for (NodeId h : ctx.helpers) {
      out.push_back({h, ctx.group[j], 1, row_for(j, h),
                     "S_" + std::to_string(h) + "^" + std::to_string(ctx.group[j])});
    }
  }
  for (std::size_t j = 0; j < ctx.group.size(); ++j) {
    for (std::size_t i = 0; i < ctx.group.size(); ++i) {
      if (i == j) continue;
      out.push_back({ctx.group[j], ctx.group[i], 2, row_for(j, ctx.group[i]),
                     "Sx_" + std::to_string(ctx.group[j]) + "^" + std::to_string(ctx.group[i])});
    }
  }
  return out;
}

std::vector<ShardVector> CodeB::repair(const RepairContext& ctx, std::span<const ShardVector> shards,
                                       RepairTranscript* transcript) const {
  const auto data = repair_data(ctx, shards);
  std::vector<std::size_t> cols;
  for (NodeId h : ctx.helpers) cols.push_back(h - 1);
  const Mat gd_inv = invert(G_.select_cols(cols));
  const std::size_t t = ctx.group.size();
  const std::size_t d = ctx.helpers.size();
  if (transcript) {
    transcript->records.insert(transcript->records.end(), data.begin(), data.end());
    transcript->phase1_symbols += data.size();
  }
  // f_j learns m_j, then hands m_jᵀg_{f_i} to every other group member.
  std::vector<Mat> m;
  for (std::size_t j = 0; j < t; ++j) {
    std::vector<FieldElem> s;
    for (std::size_t l = 0; l < d; ++l) s.push_back(data[j * d + l].symbol);
    m.push_back(Mat::row_vector(field_, s) * gd_inv);
  }
  std::vector<ShardVector> out;
  for (std::size_t i = 0; i < t; ++i) out.push_back({ctx.group[i], std::vector<FieldElem>(t)});
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < t; ++i) {
      const std::size_t col[] = {ctx.group[i] - 1u};
      const FieldElem sym = (m[j] * G_.select_cols(col)).at(0, 0);
      out[i].symbols[j] = sym;
      if (i != j && transcript) {
        transcript->records.push_back({ctx.group[j], ctx.group[i], 2, sym});
        ++transcript->phase2_symbols;
      }
    }
  }
  return out;
}

CodeBAttack code_b_attack(const CodeB& code, const Mat& data) {
  const auto& p = code.params();
  if (p.n < 2 * p.t + p.k - 1) {
    throw Error(Errc::ParameterTooSmall, "sliding-group attack needs n >= 2t + k - 1 = " +
                                             std::to_string(2 * p.t + p.k - 1));
  }
  const Field& f = code.field();
  const auto shards = code.encode(data);
  const NodeId target = p.t;
  NodeSet helpers;
  for (NodeId h = 2 * p.t; h <= 2 * p.t + p.k - 1; ++h) helpers.push_back(h);

  CodeBAttack res;
  res.observations = ObservationSet(f, p.B);
  res.recovered = Mat(f, p.t, p.k);
  std::vector<std::size_t> cols;
  for (NodeId h : helpers) cols.push_back(h - 1);
  const Mat gd_inv = invert(code.G().select_cols(cols));
  for (unsigned i = 1; i <= p.t; ++i) {
    NodeSet group;
    for (NodeId g = i; g <= p.t - 1 + i; ++g) group.push_back(g);
    const RepairContext ctx{group, helpers};
    res.contexts.push_back(ctx);
    // Node t is ranked t+1−i inside this group, so it receives m_{t+1−i}ᵀ g_λ.
    std::vector<FieldElem> s;
    for (const auto& rec : code.repair_data(ctx, shards)) {
      if (rec.to == target) s.push_back(rec.symbol);
    }
    for (const auto& tr : code.repair_functionals(ctx)) {
      if (tr.to == target && tr.phase == 1) res.observations.add(tr.row, tr.label + "(" + format_set(group) + ")");
    }
    const Mat m = Mat::row_vector(f, s) * gd_inv;
    const unsigned row = p.t - i;
    for (unsigned c = 0; c < p.k; ++c) res.recovered.set(row, c, m.at(0, c));
  }
  res.leaked_symbols = entropy_symbols(res.observations);
  return res;
}

}  // namespace coopstore
