#include "coopstore/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_map>

#include "coopstore/error.hpp"

namespace coopstore {

namespace {

constexpr std::uint64_t kBruteForceLimit = std::uint64_t{1} << 20;

void require_compatible(const ObservationSet& x, const ObservationSet& y) {
  if (x.message_len() != y.message_len()) {
    throw Error(Errc::DimensionMismatch, "observation sets over messages of length " +
                                             std::to_string(x.message_len()) + " and " +
                                             std::to_string(y.message_len()));
  }
  if (x.size() > 0 && y.size() > 0 && !(x.field() == y.field())) {
    throw Error(Errc::DimensionMismatch, "observation sets over different fields");
  }
}

Mat stacked(const ObservationSet& x, const ObservationSet& y) {
  if (x.size() == 0) return y.rows();
  if (y.size() == 0) return x.rows();
  return vstack(x.rows(), y.rows());
}

// Exponent of prime p in n.
std::int64_t valuation(std::uint64_t n, std::uint64_t p) {
  std::int64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

struct VecHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

ObservationSet::ObservationSet(Field field, std::size_t message_len)
    : message_len_(message_len), rows_(std::move(field), 0, message_len) {}

ObservationSet::ObservationSet(const Mat& rows, std::vector<std::string> labels)
    : message_len_(rows.cols()), rows_(rows), labels_(std::move(labels)) {
  if (labels_.size() != rows_.rows()) throw Error(Errc::DimensionMismatch, "one label per row required");
}

void ObservationSet::add(std::span<const FieldElem> row, std::string label) {
  if (row.size() != message_len_) throw Error(Errc::DimensionMismatch, "observation row has wrong length");
  rows_.append_row(row);
  labels_.push_back(std::move(label));
}

void ObservationSet::add(const Mat& rows, const std::string& label_prefix) {
  for (std::size_t r = 0; r < rows.rows(); ++r) add(rows.row(r), label_prefix + "[" + std::to_string(r) + "]");
}

void ObservationSet::append(const ObservationSet& other) {
  require_compatible(*this, other);
  for (std::size_t r = 0; r < other.size(); ++r) add(other.rows_.row(r), other.labels_[r]);
}

std::size_t entropy_symbols(const ObservationSet& x) { return rank(x.rows()); }

std::size_t conditional_entropy(const ObservationSet& x, const ObservationSet& y) {
  require_compatible(x, y);
  return rank(stacked(x, y)) - rank(y.rows());
}

std::size_t mutual_information(const ObservationSet& x, const ObservationSet& y) {
  require_compatible(x, y);
  return rank(x.rows()) + rank(y.rows()) - rank(stacked(x, y));
}

ExactBits ExactBits::symbols(std::size_t count, std::uint64_t q) {
  ExactBits out;
  if (count == 0) return out;
  for (std::uint64_t p : prime_factors(q)) {
    out.coeff[p] = Rational(static_cast<std::int64_t>(count) * valuation(q, p));
  }
  return out;
}

double ExactBits::bits() const {
  double total = 0.0;
  for (const auto& [p, c] : coeff) {
    total += static_cast<double>(c.numerator()) / static_cast<double>(c.denominator()) * std::log2(double(p));
  }
  return total;
}

std::string ExactBits::to_string() const {
  if (coeff.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : coeff) {
    os << (first ? "" : " + ");
    if (c.denominator() == 1) {
      os << c.numerator();
    } else {
      os << c;
    }
    os << "*log2(" << p << ")";
    first = false;
  }
  return os.str();
}

ExactBits brute_force_entropy(const ObservationSet& x) {
  const Field& f = x.field();
  const std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < x.message_len(); ++i) {
    if (total > kBruteForceLimit / q) {
      throw Error(Errc::InstanceTooLarge, "q^B exceeds 2^20 for q=" + std::to_string(q) +
                                              ", B=" + std::to_string(x.message_len()));
    }
    total *= q;
  }
  std::vector<FieldElem> elems(q);
  for (std::uint64_t i = 0; i < q; ++i) elems[i] = f.element(i);
  // prod[(r·B + c)·q + v] = row_r[c] · elems[v]; the odometer below changes
  // one digit per step on average, so each row is updated incrementally.
  const std::size_t B = x.message_len();
  // Repeated or zero rows do not change the joint distribution.
  std::vector<std::vector<FieldElem>> rows;
  {
    std::set<std::vector<FieldElem>> seen;
    for (std::size_t r = 0; r < x.size(); ++r) {
      const auto row = x.rows().row(r);
      std::vector<FieldElem> v(row.begin(), row.end());
      if (std::all_of(v.begin(), v.end(), [](FieldElem e) { return e.value == 0; })) continue;
      if (seen.insert(v).second) rows.push_back(std::move(v));
    }
  }
  const std::size_t nrows = rows.size();
  std::vector<FieldElem> prod(nrows * B * q);
  for (std::size_t r = 0; r < nrows; ++r) {
    const auto& row = rows[r];
    for (std::size_t c = 0; c < B; ++c) {
      for (std::uint64_t v = 0; v < q; ++v) prod[(r * B + c) * q + v] = f.mul(row[c], elems[v]);
    }
  }

  std::unordered_map<std::vector<std::uint64_t>, std::uint64_t, VecHash> counts;
  std::vector<std::size_t> digits(B, 0);
  std::vector<FieldElem> acc(nrows, f.zero());
  std::vector<std::uint64_t> out(nrows, 0);
  for (std::uint64_t msg = 0; msg < total; ++msg) {
    for (std::size_t r = 0; r < nrows; ++r) out[r] = acc[r].value;
    ++counts[out];
    for (std::size_t c = 0; c < B; ++c) {
      const std::size_t from = digits[c];
      const std::size_t to = from + 1 < q ? from + 1 : 0;
      digits[c] = to;
      for (std::size_t r = 0; r < nrows; ++r) {
        const std::size_t base = (r * B + c) * q;
        acc[r] = f.add(f.sub(acc[r], prod[base + from]), prod[base + to]);
      }
      if (to != 0) break;
    }
  }

  // H = log2 N − (1/N) Σ c·log2 c, expanded over primes.
  std::map<std::uint64_t, std::int64_t> weighted;  // Σ c·v_p(c)
  for (const auto& [key, c] : counts) {
    for (std::uint64_t p : prime_factors(c)) weighted[p] += static_cast<std::int64_t>(c) * valuation(c, p);
  }
  ExactBits h;
  const auto n = static_cast<std::int64_t>(total);
  for (std::uint64_t p : prime_factors(total)) h.coeff[p] += Rational(valuation(total, p));
  for (const auto& [p, w] : weighted) h.coeff[p] -= Rational(w, n);
  for (auto it = h.coeff.begin(); it != h.coeff.end();) {
    it = it->second.numerator() == 0 ? h.coeff.erase(it) : std::next(it);
  }
  return h;
}

}  // namespace coopstore
