#include "coopstore/eavesdropper.hpp"

#include <algorithm>
#include <sstream>

#include "coopstore/error.hpp"
#include "coopstore/stable_code.hpp"

namespace coopstore {

namespace {

NodeSet range_set(unsigned lo, unsigned hi) {
  NodeSet out;
  for (NodeId i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

ObservationSet merged(const ObservationSet& a, const ObservationSet& b) {
  ObservationSet out = a;
  out.append(b);
  return out;
}

ObservationSet empty_set(const RepairModel& model) { return ObservationSet(model.field(), model.params().B); }

ObservationSet context_rows(const RepairModel& model, const RepairContext& ctx, const NodeSet& from,
                            const NodeSet& to, int phase) {
  ObservationSet out = empty_set(model);
  for (const auto& tr : model.transfers(ctx)) {
    if (tr.phase != phase) continue;
    if (std::find(from.begin(), from.end(), tr.from) == from.end()) continue;
    if (std::find(to.begin(), to.end(), tr.to) == to.end()) continue;
    out.add(tr.row, tr.label);
  }
  return out;
}

void fail(LemmaResult& res, const std::string& witness) {
  if (res.pass) res.witness = witness;
  res.pass = false;
}

}  // namespace

EveModel EveModel::make(const CodeParams& p, NodeSet E, NodeSet F) {
  std::sort(E.begin(), E.end());
  std::sort(F.begin(), F.end());
  NodeSet G;
  const auto l = E.size() + F.size();
  if (l <= p.k) {
    for (NodeId id : complement(p.n, set_union(E, F))) {
      if (G.size() == p.k - l) break;
      G.push_back(id);
    }
  }
  return make(p, std::move(E), std::move(F), std::move(G));
}

EveModel EveModel::make(const CodeParams& p, NodeSet E, NodeSet F, NodeSet G) {
  std::sort(E.begin(), E.end());
  std::sort(F.begin(), F.end());
  std::sort(G.begin(), G.end());
  EveModel eve{E, F, G};
  auto bad = [&eve](const std::string& why) { throw Error(Errc::InvalidEveModel, why + " for " + eve.to_string()); };
  for (const NodeSet* s : {&eve.E, &eve.F, &eve.G}) {
    for (NodeId id : *s) {
      if (id < 1 || id > p.n) bad("node id outside [1, n]");
    }
    if (std::adjacent_find(s->begin(), s->end()) != s->end()) bad("repeated node id");
  }
  if (!disjoint(eve.E, eve.F)) bad("E and F overlap");
  if (eve.E.size() + eve.F.size() > p.k - 1) bad("l1 + l2 must be at most k - 1");
  if (eve.G.size() != p.k - eve.E.size() - eve.F.size() || !disjoint(eve.G, set_union(eve.E, eve.F))) {
    bad("G must have k - l1 - l2 nodes outside E and F");
  }
  return eve;
}

std::string EveModel::to_string() const { return "E=" + format_set(E) + " F=" + format_set(F) + " G=" + format_set(G); }

ObservationSet leakage_observations(const RepairModel& model, const EveModel& eve) {
  ObservationSet obs = storage_set(model, eve.E);
  for (NodeId i : eve.F) {
    if (!model.models_receiver(i)) {
      throw Error(Errc::InvalidEveModel, model.name() + " does not model the downloads of node " + std::to_string(i));
    }
  }
  obs.append(download_set(model, eve.F));
  return obs;
}

LeakageReport measure_leakage(const RepairModel& model, const EveModel& eve) {
  LeakageReport rep;
  rep.eve = eve;
  rep.observations = leakage_observations(model, eve);
  rep.leaked_symbols = entropy_symbols(rep.observations);
  rep.measured_capacity = model.params().B - rep.leaked_symbols;
  try {
    rep.predicted_capacity = predicted_secrecy_capacity(model.params(), eve.l1(), eve.l2());
  } catch (const Error&) {
    rep.predicted_capacity.reset();
  }
  return rep;
}

std::size_t measured_secrecy_capacity(const RepairModel& model, const EveModel& eve) {
  return model.params().B - entropy_symbols(leakage_observations(model, eve));
}

std::optional<std::size_t> predicted_secrecy_capacity(const CodeParams& p, unsigned l1, unsigned l2) {
  if (l1 + l2 > p.k - 1) {
    throw Error(Errc::InvalidL, "l1 + l2 = " + std::to_string(l1 + l2) + " exceeds k - 1 = " + std::to_string(p.k - 1));
  }
  if ((l2 <= p.t && p.t <= p.k) || (p.t > p.k && p.d == p.k)) {
    return static_cast<std::size_t>(p.k - l1 - l2) * (p.alpha - l2 * p.beta);
  }
  if (p.d == p.k && l2 >= p.t) return 0;
  return std::nullopt;
}

std::vector<EveModel> all_placements(const CodeParams& p, unsigned l1, unsigned l2) {
  std::vector<EveModel> out;
  for (const auto& F : combinations(complement(p.n, {}), l2)) {
    for (const auto& E : combinations(complement(p.n, F), l1)) out.push_back(EveModel::make(p, E, F));
  }
  return out;
}

Mat repair_rows(const RepairModel& model, NodeId helper, NodeId receiver) {
  const RepairContext ctx = canonical_context(model.params(), helper, receiver);
  return context_rows(model, ctx, {helper}, {receiver}, 1).rows();
}

ObservationSet storage_set(const RepairModel& model, const NodeSet& nodes) {
  ObservationSet out = empty_set(model);
  for (NodeId i : nodes) out.add(model.storage_functionals(i), "W_" + std::to_string(i));
  return out;
}

ObservationSet repair_set(const RepairModel& model, const NodeSet& helpers, const NodeSet& receivers) {
  ObservationSet out = empty_set(model);
  for (NodeId f : receivers) {
    for (NodeId h : helpers) {
      if (h == f) continue;
      out.add(repair_rows(model, h, f), "S_" + std::to_string(h) + "^" + std::to_string(f));
    }
  }
  return out;
}

ObservationSet full_repair_set(const RepairModel& model, const NodeSet& receivers) {
  return repair_set(model, complement(model.params().n, {}), receivers);
}

ObservationSet download_set(const RepairModel& model, const NodeSet& receivers) {
  ObservationSet out = empty_set(model);
  for (NodeId i : receivers) {
    for (const auto& ctx : model.contexts_for(i)) {
      for (const auto& tr : model.downloads(ctx, i)) out.add(tr.row, tr.label + " " + ctx.to_string());
    }
  }
  return out;
}

ObservationSet exchange_set(const RepairModel& model, const NodeSet& receivers) {
  ObservationSet out = empty_set(model);
  for (NodeId i : receivers) {
    for (const auto& ctx : model.contexts_for(i)) {
      for (const auto& tr : model.downloads(ctx, i)) {
        if (tr.phase == 2) out.add(tr.row, tr.label + " " + ctx.to_string());
      }
    }
  }
  return out;
}

LemmaResult lemma2(const RepairModel& model) {
  const auto& p = model.params();
  LemmaResult res{"lemma2", true, 0, ""};
  if (p.t > p.k) {
    res.witness = "not applicable: t > k";
    return res;
  }
  const NodeSet all = complement(p.n, {});
  for (const auto& C : combinations(all, p.t)) {
    const ObservationSet wc = storage_set(model, C);
    for (const auto& A : combinations(complement(p.n, C), p.k - p.t)) {
      for (const auto& Bset : combinations(complement(p.n, set_union(C, A)), p.d - p.k + p.t)) {
        ++res.checks;
        const RepairContext ctx{C, set_union(A, Bset)};
        const auto s_all = context_rows(model, ctx, ctx.helpers, C, 1);
        const auto s_a = context_rows(model, ctx, A, C, 1);
        const auto s_b = context_rows(model, ctx, Bset, C, 1);
        const std::size_t h = entropy_symbols(s_all);
        const std::size_t cond = conditional_entropy(s_b, merged(wc, s_a));
        if (h != std::size_t{p.d} * p.t * p.beta || cond != 0) {
          fail(res, "C=" + format_set(C) + " A=" + format_set(A) + " B=" + format_set(Bset) + ": H=" +
                        std::to_string(h) + " H(S_B|W_C,S_A)=" + std::to_string(cond));
        }
      }
    }
  }
  return res;
}

LemmaResult lemma3(const RepairModel& model) {
  const auto& p = model.params();
  LemmaResult res{"lemma3", true, 0, ""};
  for (NodeId i = 1; i <= p.n; ++i) {
    if (!model.models_receiver(i)) continue;
    const ObservationSet wi = storage_set(model, {i});
    for (const auto& Cp : combinations(complement(p.n, {i}), p.t - 1)) {
      const NodeSet group = set_union({i}, Cp);
      for (const auto& Ap : combinations(complement(p.n, group), p.k - 1)) {
        for (const auto& Bp : combinations(complement(p.n, set_union(group, Ap)), p.d - p.k + 1)) {
          ++res.checks;
          const RepairContext ctx{group, set_union(Ap, Bp)};
          const auto s_a = context_rows(model, ctx, Ap, {i}, 1);
          const auto s_b = context_rows(model, ctx, Bp, {i}, 1);
          const auto x_c = context_rows(model, ctx, Cp, {i}, 2);
          const std::size_t h = entropy_symbols(merged(merged(s_a, s_b), x_c));
          const std::size_t cond = conditional_entropy(merged(s_b, x_c), merged(wi, s_a));
          if (h != std::size_t{p.d + p.t - 1} * p.beta || cond != 0) {
            fail(res, "i=" + std::to_string(i) + " C'=" + format_set(Cp) + " A'=" + format_set(Ap) +
                          " B'=" + format_set(Bp) + ": H=" + std::to_string(h) + " cond=" + std::to_string(cond));
          }
        }
      }
    }
  }
  return res;
}

LemmaResult lemma4(const RepairModel& model) {
  const auto& p = model.params();
  LemmaResult res{"lemma4", true, 0, ""};
  for (unsigned l2 = 1; l2 + 1 <= p.k; ++l2) {
    for (const auto& F : combinations(complement(p.n, {}), l2)) {
      if (!std::all_of(F.begin(), F.end(), [&](NodeId i) { return model.models_receiver(i); })) continue;
      const auto tilde = download_set(model, F);
      const auto wf = storage_set(model, F);
      ++res.checks;
      if (!same_row_space(tilde.rows(), merged(wf, full_repair_set(model, F)).rows())) {
        fail(res, "span(S~^F) != span(W_F, S^F) for F=" + format_set(F));
      }
      for (unsigned l1 = 0; l1 + l2 + 1 <= p.k; ++l1) {
        for (const auto& E : combinations(complement(p.n, F), l1)) {
          const auto wef = merged(storage_set(model, E), wf);
          const std::size_t lhs = conditional_entropy(tilde, wef);
          for (const auto& G : combinations(complement(p.n, set_union(E, F)), p.k - l1 - l2)) {
            ++res.checks;
            const std::size_t rhs = entropy_symbols(repair_set(model, G, F));
            if (lhs != rhs) {
              fail(res, "E=" + format_set(E) + " F=" + format_set(F) + " G=" + format_set(G) +
                            ": H(S~^F|W_E,W_F)=" + std::to_string(lhs) + " H(S_G^F)=" + std::to_string(rhs));
            }
          }
        }
      }
    }
  }
  return res;
}

LemmaResult lemma5(const RepairModel& model) {
  const auto& p = model.params();
  LemmaResult res{"lemma5", true, 0, ""};
  const bool independent_regime = p.t <= p.k || p.d == p.k;
  for (unsigned size = 1; size + 1 <= p.k; ++size) {
    for (const auto& F : combinations(complement(p.n, {}), size)) {
      std::optional<std::pair<NodeId, std::size_t>> first;
      for (NodeId i : complement(p.n, F)) {
        ++res.checks;
        const std::size_t h = entropy_symbols(repair_set(model, {i}, F));
        if (!first) {
          first = {i, h};
        } else if (h != first->second) {
          fail(res, "F=" + format_set(F) + ": H(S_" + std::to_string(first->first) + "^F)=" +
                        std::to_string(first->second) + " but H(S_" + std::to_string(i) + "^F)=" + std::to_string(h));
        }
        if (independent_regime && size <= p.t && h != std::size_t{size} * p.beta) {
          fail(res, "F=" + format_set(F) + ": H(S_" + std::to_string(i) + "^F)=" + std::to_string(h) +
                        " != |F|beta=" + std::to_string(size * p.beta));
        }
      }
    }
  }
  return res;
}

LemmaResult own_content_recoverable(const RepairModel& model) {
  const auto& p = model.params();
  LemmaResult res{"own-content", true, 0, ""};
  for (NodeId i = 1; i <= p.n; ++i) {
    if (!model.models_receiver(i)) continue;
    ++res.checks;
    const std::size_t h = conditional_entropy(storage_set(model, {i}), download_set(model, {i}));
    if (h != 0) fail(res, "H(W_" + std::to_string(i) + " | S~^" + std::to_string(i) + ")=" + std::to_string(h));
  }
  return res;
}

std::vector<LemmaResult> lemma_suite(const RepairModel& model) {
  return {lemma2(model), lemma3(model), lemma4(model), lemma5(model), own_content_recoverable(model)};
}

void require_all(const std::vector<LemmaResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) throw Error(Errc::LemmaViolation, r.name + ": " + r.witness);
  }
}

std::vector<LemmaResult> placement_verifications(const RepairModel& model) {
  const auto& p = model.params();
  LemmaResult v1{"exchange-span", true, 0, ""};
  LemmaResult v2{"repair-determined", true, 0, ""};
  LemmaResult v3{"leak-decomposition", true, 0, ""};
  for (unsigned l2 = 1; l2 + 1 <= p.k; ++l2) {
    for (unsigned l1 = 0; l1 + l2 + 1 <= p.k; ++l1) {
      const NodeSet E = range_set(1, l1);
      const NodeSet F = range_set(l1 + 1, l1 + l2);
      const std::string where = "(l1,l2)=(" + std::to_string(l1) + "," + std::to_string(l2) + ")";
      const auto wf = storage_set(model, F);
      const auto tilde = download_set(model, F);

      ++v1.checks;
      if (p.t >= 2 && !same_row_space(exchange_set(model, F).rows(), wf.rows())) {
        fail(v1, where + ": exchange rows do not span W_F");
      }
      if (!same_row_space(tilde.rows(), merged(wf, full_repair_set(model, F)).rows())) {
        fail(v1, where + ": S~^F != {W_F, S^F}");
      }

      ++v2.checks;
      const auto w_all = storage_set(model, range_set(1, l1 + l2));
      const auto s_low = repair_set(model, range_set(l1 + l2 + 1, p.k), F);
      const auto s_high = repair_set(model, range_set(p.k + 1, p.n), F);
      const std::size_t cond = conditional_entropy(s_high, merged(w_all, s_low));
      if (cond != 0) fail(v2, where + ": H(S_[k+1,n]^F | W, S_low^F)=" + std::to_string(cond));

      ++v3.checks;
      const std::size_t leak = entropy_symbols(merged(storage_set(model, E), tilde));
      std::size_t expected = std::size_t{l1 + l2} * p.alpha;
      for (NodeId g = l1 + l2 + 1; g <= p.k; ++g) {
        const std::size_t hg = entropy_symbols(repair_set(model, {g}, F));
        expected += hg;
        if (hg != std::size_t{std::min(l2, p.t)} * p.beta) {
          fail(v3, where + ": H(S_" + std::to_string(g) + "^F)=" + std::to_string(hg));
        }
      }
      const std::size_t closed = l2 <= p.t ? std::size_t{p.k - l1 - l2} * (p.alpha - l2 * p.beta) : 0;
      if (leak != expected || p.B - leak != closed) {
        fail(v3, where + ": leak " + std::to_string(leak) + ", decomposition " + std::to_string(expected) +
                     ", capacity " + std::to_string(p.B - leak) + " vs " + std::to_string(closed));
      }
    }
  }
  return {v1, v2, v3};
}

BandwidthComparison bandwidth_comparison(unsigned n, unsigned k, unsigned d, unsigned t, unsigned B) {
  (void)n;
  if (k == 0 || t == 0 || d < k) {
    throw Error(Errc::InvalidParams, "bandwidth comparison needs d >= k >= 1, t >= 1");
  }
  if (B % (k * (d - k + t)) != 0) {
    throw Error(Errc::NonIntegralParams, "B=" + std::to_string(B) + " is not a multiple of k(d-k+t)=" +
                                             std::to_string(k * (d - k + t)));
  }
  BandwidthComparison out;
  out.msr_total = Rational(std::int64_t{t} * d * B, std::int64_t{k} * (d - k + 1));
  out.mscr_total = Rational(std::int64_t{t} * (d + t - 1) * B, std::int64_t{k} * (d - k + t));
  return out;
}

}  // namespace coopstore
