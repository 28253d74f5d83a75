#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "coopstore/matrix.hpp"

namespace coopstore {

/// Labeled linear functionals of a uniformly random message vector of length
/// `message_len`. Entropy of the observation equals the rank of its rows.
class ObservationSet {
 public:
  ObservationSet() = default;
  ObservationSet(Field field, std::size_t message_len);
  ObservationSet(const Mat& rows, std::vector<std::string> labels);

  const Field& field() const { return rows_.field(); }
  std::size_t message_len() const { return message_len_; }
  std::size_t size() const { return rows_.rows(); }
  const Mat& rows() const { return rows_; }
  const std::vector<std::string>& labels() const { return labels_; }

  void add(std::span<const FieldElem> row, std::string label);
  void add(const Mat& rows, const std::string& label_prefix);
  void append(const ObservationSet& other);

 private:
  std::size_t message_len_ = 0;
  Mat rows_;
  std::vector<std::string> labels_;
};

/// H(X) in symbols (units of log q).
std::size_t entropy_symbols(const ObservationSet& x);
/// H(X | Y) = rank[X; Y] − rank Y.
std::size_t conditional_entropy(const ObservationSet& x, const ObservationSet& y);
/// I(X; Y) = rank X + rank Y − rank[X; Y].
std::size_t mutual_information(const ObservationSet& x, const ObservationSet& y);

using Rational = boost::rational<std::int64_t>;

/// Shannon entropy in bits written exactly as Σ_p c_p·log2(p) with rational c_p
/// over primes p. Logs of distinct primes are linearly independent over Q, so
/// two values are equal iff their coefficient maps are.
struct ExactBits {
  std::map<std::uint64_t, Rational> coeff;

  static ExactBits symbols(std::size_t count, std::uint64_t q);
  double bits() const;
  std::string to_string() const;
  friend bool operator==(const ExactBits&, const ExactBits&) = default;
};

/// Enumerates all q^B messages and returns the exact entropy of the observed
/// tuple. Throws InstanceTooLarge above 2^20 messages.
ExactBits brute_force_entropy(const ObservationSet& x);

}  // namespace coopstore
