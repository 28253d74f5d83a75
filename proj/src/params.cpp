#include "coopstore/params.hpp"

#include <algorithm>
#include <sstream>

#include "coopstore/error.hpp"

namespace coopstore {

CodeParams CodeParams::mscr(unsigned n, unsigned k, unsigned d, unsigned t, std::uint64_t q) {
  CodeParams p;
  p.n = n;
  p.k = k;
  p.d = d;
  p.t = t;
  p.q = q;
  if (d + t >= k) {
    p.alpha = d - k + t;
    p.B = k * p.alpha;
  }
  p.beta = 1;
  p.beta_prime = 1;
  p.validate();
  return p;
}

void CodeParams::validate() const {
  auto fail = [this](const std::string& why) { throw Error(Errc::InvalidParams, why + " in " + to_string()); };
  if (k == 0 || t == 0) fail("k and t must be positive");
  if (d < k) fail("d < k");
  if (n < d + t) fail("n < d + t");
  if (B == 0 || B % k != 0 || alpha != B / k) fail("alpha != B/k");
  const unsigned denom = k * (d - k + t);
  if (B % denom != 0 || beta != B / denom || beta_prime != beta) fail("beta, beta' not at the MSCR point");
  if (q < 2) fail("field order must be at least 2");
}

void CodeParams::validate_stable() const {
  validate();
  if (d != k) throw Error(Errc::InvalidParams, "stable construction needs d = k, got " + to_string());
  if (alpha != t || beta != 1 || B != k * t) {
    throw Error(Errc::InvalidParams, "stable construction needs alpha = t, beta = 1, got " + to_string());
  }
}

std::string CodeParams::to_string() const {
  std::ostringstream os;
  os << "{n=" << n << ",k=" << k << ",d=" << d << ",t=" << t << ",alpha=" << alpha << ",beta=" << beta
     << ",beta'=" << beta_prime << ",B=" << B << ",q=" << q << "}";
  return os.str();
}

void RepairContext::validate(const CodeParams& p) const {
  auto fail = [this](const std::string& why) { throw Error(Errc::InvalidContext, why + " in " + to_string()); };
  if (group.size() != p.t) fail("group size must be t=" + std::to_string(p.t));
  if (helpers.size() != p.d) fail("helper count must be d=" + std::to_string(p.d));
  NodeSet all = group;
  all.insert(all.end(), helpers.begin(), helpers.end());
  for (NodeId id : all) {
    if (id < 1 || id > p.n) fail("node " + std::to_string(id) + " outside [1, n]");
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) fail("group and helpers must be distinct and disjoint");
}

bool RepairContext::in_group(NodeId id) const { return std::find(group.begin(), group.end(), id) != group.end(); }

std::string RepairContext::to_string() const { return "C=" + format_set(group) + " D=" + format_set(helpers); }

std::vector<NodeSet> combinations(const NodeSet& pool, std::size_t r) {
  NodeSet sorted = pool;
  std::sort(sorted.begin(), sorted.end());
  std::vector<NodeSet> out;
  if (r > sorted.size()) return out;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    NodeSet pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = sorted[idx[i]];
    out.push_back(std::move(pick));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == sorted.size() - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

NodeSet complement(unsigned n, const NodeSet& exclude) {
  NodeSet out;
  for (NodeId i = 1; i <= n; ++i) {
    if (std::find(exclude.begin(), exclude.end(), i) == exclude.end()) out.push_back(i);
  }
  return out;
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  NodeSet out = a;
  for (NodeId x : b) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool disjoint(const NodeSet& a, const NodeSet& b) {
  return std::none_of(a.begin(), a.end(), [&](NodeId x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

std::string format_set(const NodeSet& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

}  // namespace coopstore
