#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "coopstore/field.hpp"

namespace coopstore {

/// Dense row-major matrix over a finite field.
class Mat {
 public:
  Mat() = default;
  Mat(Field field, std::size_t rows, std::size_t cols);

  static Mat zeros(const Field& field, std::size_t rows, std::size_t cols) { return Mat(field, rows, cols); }
  static Mat identity(const Field& field, std::size_t n);
  /// Entries given as raw field values.
  static Mat from_rows(const Field& field, const std::vector<std::vector<std::uint64_t>>& rows);
  static Mat from_elems(const Field& field, std::size_t rows, std::size_t cols, std::vector<FieldElem> entries);
  static Mat row_vector(const Field& field, std::span<const FieldElem> entries);
  static Mat column_vector(const Field& field, std::span<const FieldElem> entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  FieldElem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, FieldElem v) { data_[r * cols_ + c] = v; }
  std::span<const FieldElem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<FieldElem> column(std::size_t c) const;
  const std::vector<FieldElem>& entries() const { return data_; }

  void append_row(std::span<const FieldElem> row);

  Mat transpose() const;
  Mat select_rows(std::span<const std::size_t> idx) const;
  Mat select_cols(std::span<const std::size_t> idx) const;
  /// Same matrix with every entry embedded into the extension `ext`.
  Mat lift(const Field& ext) const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

Mat vstack(const Mat& top, const Mat& bottom);
Mat hstack(const Mat& left, const Mat& right);

std::size_t rank(const Mat& m);
/// Throws Errc::Singular if `m` is not invertible.
Mat invert(const Mat& m);
/// Row-reduced echelon form with pivot-row normalisation; zero rows dropped.
Mat row_echelon(const Mat& m);
/// True iff every row of `sub` lies in the row space of `m`.
bool row_space_contains(const Mat& m, const Mat& sub);
bool same_row_space(const Mat& a, const Mat& b);

/// k×n matrix with entry (i,j) = points[j]^i.
Mat vandermonde(const Field& field, std::span<const FieldElem> points, std::size_t k);
/// Entry (i,j) = 1/(x_i − y_j); all points must be distinct.
Mat cauchy(const Field& field, std::span<const FieldElem> x, std::span<const FieldElem> y);
/// t×n matrix [I_t | C] with C Cauchy on the first n field elements in enumeration order.
Mat systematic_superregular(std::size_t t, std::size_t n, const Field& field);
/// Entry (i,j) = points[j]^(frobenius_base^i).
Mat moore_matrix(const Field& field, std::span<const FieldElem> points, std::size_t rows,
                 std::uint64_t frobenius_base);
/// The n evaluation points 1..n (enumeration indices), used for the Vandermonde generator.
std::vector<FieldElem> default_points(const Field& field, std::size_t n);

}  // namespace coopstore
