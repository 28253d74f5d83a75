#include "coopstore/repair_model.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace coopstore {

std::vector<RepairContext> RepairModel::all_contexts() const {
  const auto& p = params();
  std::vector<RepairContext> out;
  NodeSet all = complement(p.n, {});
  for (const auto& group : combinations(all, p.t)) {
    for (const auto& helpers : combinations(complement(p.n, group), p.d)) out.push_back({group, helpers});
  }
  return out;
}

std::vector<RepairContext> RepairModel::contexts_for(NodeId node) const {
  std::vector<RepairContext> out;
  for (auto& ctx : all_contexts()) {
    if (ctx.in_group(node)) out.push_back(std::move(ctx));
  }
  return out;
}

std::vector<Transfer> RepairModel::downloads(const RepairContext& ctx, NodeId receiver) const {
  std::vector<Transfer> out;
  for (auto& tr : transfers(ctx)) {
    if (tr.to == receiver) out.push_back(std::move(tr));
  }
  return out;
}

std::string StabilityWitness::describe(const Field& f) const {
  auto fmt = [&f](const std::vector<FieldElem>& row) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << f.format(row[i]);
    os << "]";
    return os.str();
  };
  std::ostringstream os;
  os << "S_" << helper << "^" << receiver << " is " << fmt(first_row) << " under " << first.to_string() << " but "
     << fmt(second_row) << " under " << second.to_string();
  return os.str();
}

StabilityResult stability_certificate(const RepairModel& model) {
  StabilityResult res;
  using Key = std::pair<NodeId, NodeId>;
  std::map<Key, std::pair<RepairContext, std::vector<FieldElem>>> repair_seen;
  std::map<Key, std::vector<FieldElem>> exchange_seen;
  for (const auto& ctx : model.all_contexts()) {
    ++res.contexts_checked;
    for (const auto& tr : model.transfers(ctx)) {
      const Key key{tr.from, tr.to};
      if (tr.phase == 2) {
        auto [it, inserted] = exchange_seen.emplace(key, tr.row);
        if (!inserted && it->second != tr.row) res.exchange_fixed = false;
        continue;
      }
      if (tr.phase != 1) continue;
      ++res.transfers_checked;
      auto [it, inserted] = repair_seen.emplace(key, std::make_pair(ctx, tr.row));
      if (!inserted && it->second.second != tr.row && !res.witness) {
        res.stable = false;
        res.witness = StabilityWitness{tr.from, tr.to, it->second.first, it->second.second, ctx, tr.row};
      }
    }
  }
  return res;
}

}  // namespace coopstore
