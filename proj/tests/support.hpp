#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "coopstore/error.hpp"
#include "coopstore/matrix.hpp"
#include "coopstore/params.hpp"

namespace coopstore::testing {

/// Runs `fn` and returns the code of the Error it throws.
inline Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::IoError;
}

/// Seeded generator for property tests. Uses the raw mt19937_64 stream so a
/// failing seed reproduces on any standard library.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (engine_() & 1) != 0; }

  FieldElem elem(const Field& f) { return f.element(below(f.order())); }
  FieldElem nonzero(const Field& f) { return f.element(1 + below(f.order() - 1)); }

  std::vector<FieldElem> vec(const Field& f, std::size_t len) {
    std::vector<FieldElem> out(len);
    for (auto& e : out) e = elem(f);
    return out;
  }

  Mat mat(const Field& f, std::size_t rows, std::size_t cols) { return Mat::from_elems(f, rows, cols, vec(f, rows * cols)); }

  /// Uniformly random `size`-subset of `pool`, sorted.
  NodeSet subset(NodeSet pool, std::size_t size) {
    for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + below(pool.size() - i)]);
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

 private:
  std::mt19937_64 engine_;
};

inline NodeSet iota_nodes(unsigned n) {
  NodeSet out;
  for (NodeId i = 1; i <= n; ++i) out.push_back(i);
  return out;
}

/// Every size-r subset of {0..n-1} as column indices.
inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace coopstore::testing
