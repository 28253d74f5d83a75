#include "coopstore/matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "coopstore/error.hpp"

namespace coopstore {

namespace {

void require_same_field(const Mat& a, const Mat& b, const char* op) {
  if (!(a.field() == b.field())) throw Error(Errc::DimensionMismatch, std::string(op) + ": field mismatch");
}

// In-place elimination to reduced echelon form; returns the rank.
std::size_t eliminate(const Field& f, std::vector<FieldElem>& a, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c].value == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    }
    const FieldElem inv = f.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const FieldElem factor = a[i * cols + c];
      if (factor.value == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, FieldElem{0}) {}

Mat Mat::identity(const Field& field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

Mat Mat::from_rows(const Field& field, const std::vector<std::vector<std::uint64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Mat m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(Errc::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, field.element(rows[i][j]));
  }
  return m;
}

Mat Mat::from_elems(const Field& field, std::size_t rows, std::size_t cols, std::vector<FieldElem> entries) {
  if (entries.size() != rows * cols) throw Error(Errc::DimensionMismatch, "entry count does not match shape");
  Mat m(field, rows, cols);
  m.data_ = std::move(entries);
  return m;
}

Mat Mat::row_vector(const Field& field, std::span<const FieldElem> entries) {
  return from_elems(field, 1, entries.size(), {entries.begin(), entries.end()});
}

Mat Mat::column_vector(const Field& field, std::span<const FieldElem> entries) {
  return from_elems(field, entries.size(), 1, {entries.begin(), entries.end()});
}

std::vector<FieldElem> Mat::column(std::size_t c) const {
  std::vector<FieldElem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

void Mat::append_row(std::span<const FieldElem> row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const {
  Mat out(field_, 0, cols_);
  for (std::size_t r : idx) {
    if (r >= rows_) throw Error(Errc::DimensionMismatch, "select_rows: index out of range");
    out.append_row(row(r));
  }
  return out;
}

Mat Mat::select_cols(std::span<const std::size_t> idx) const {
  Mat out(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw Error(Errc::DimensionMismatch, "select_cols: index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out.set(r, j, at(r, idx[j]));
  }
  return out;
}

Mat Mat::lift(const Field& ext) const {
  Mat out(ext, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ext.embed(data_[i]);
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FieldElem e) { return e.value == 0; });
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_field(a, b, "multiply");
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "multiply: inner dimensions differ");
  const Field& f = a.field_;
  Mat out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const FieldElem x = a.at(i, l);
      if (x.value == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.set(i, j, f.add(out.at(i, j), f.mul(x, b.at(l, j))));
    }
  }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_field(a, b, "add");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "add: shape mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && (a.empty() || a.field_ == b.field_);
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << field_.format(at(r, c));
    os << "]";
  }
  os << "]";
  return os.str();
}

Mat vstack(const Mat& top, const Mat& bottom) {
  if (top.rows() == 0 && top.cols() == 0) return bottom;
  if (bottom.rows() == 0 && bottom.cols() == 0) return top;
  require_same_field(top, bottom, "vstack");
  if (top.cols() != bottom.cols()) throw Error(Errc::DimensionMismatch, "vstack: column count mismatch");
  Mat out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

Mat hstack(const Mat& left, const Mat& right) {
  require_same_field(left, right, "hstack");
  if (left.rows() != right.rows()) throw Error(Errc::DimensionMismatch, "hstack: row count mismatch");
  Mat out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) out.set(r, c, left.at(r, c));
    for (std::size_t c = 0; c < right.cols(); ++c) out.set(r, left.cols() + c, right.at(r, c));
  }
  return out;
}

std::size_t rank(const Mat& m) {
  if (m.empty()) return 0;
  auto a = m.entries();
  return eliminate(m.field(), a, m.rows(), m.cols());
}

Mat row_echelon(const Mat& m) {
  if (m.empty()) return m;
  auto a = m.entries();
  const std::size_t r = eliminate(m.field(), a, m.rows(), m.cols());
  a.resize(r * m.cols());
  return Mat::from_elems(m.field(), r, m.cols(), std::move(a));
}

Mat invert(const Mat& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "invert: matrix is not square");
  const std::size_t n = m.rows();
  const Mat aug = hstack(m, Mat::identity(m.field(), n));
  auto a = aug.entries();
  // Reduction of [M | I]: rank n iff the left block became the identity.
  eliminate(m.field(), a, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i * 2 * n + j] != (i == j ? m.field().one() : m.field().zero())) {
        throw Error(Errc::Singular, "matrix of size " + std::to_string(n) + " is singular");
      }
    }
  }
  Mat inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, a[i * 2 * n + n + j]);
  }
  return inv;
}

bool row_space_contains(const Mat& m, const Mat& sub) {
  if (sub.rows() == 0) return true;
  return rank(vstack(m, sub)) == rank(m);
}

bool same_row_space(const Mat& a, const Mat& b) {
  const std::size_t ra = rank(a);
  return ra == rank(b) && rank(vstack(a, b)) == ra;
}

Mat vandermonde(const Field& field, std::span<const FieldElem> points, std::size_t k) {
  std::set<FieldElem> seen;
  for (auto p : points) {
    if (!seen.insert(p).second) throw Error(Errc::DuplicatePoint, "point " + field.format(p) + " repeated");
  }
  Mat out(field, k, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    FieldElem v = field.one();
    for (std::size_t i = 0; i < k; ++i) {
      out.set(i, j, v);
      v = field.mul(v, points[j]);
    }
  }
  return out;
}

Mat cauchy(const Field& field, std::span<const FieldElem> x, std::span<const FieldElem> y) {
  std::set<FieldElem> seen;
  for (auto p : x) {
    if (!seen.insert(p).second) throw Error(Errc::DuplicatePoint, "cauchy point repeated");
  }
  for (auto p : y) {
    if (!seen.insert(p).second) throw Error(Errc::DuplicatePoint, "cauchy point repeated");
  }
  Mat out(field, x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out.set(i, j, field.inv(field.sub(x[i], y[j])));
  }
  return out;
}

Mat systematic_superregular(std::size_t t, std::size_t n, const Field& field) {
  if (t == 0 || t > n) throw Error(Errc::DimensionMismatch, "systematic_superregular needs 1 <= t <= n");
  if (field.order() < n) {
    throw Error(Errc::FieldTooSmall, "need at least " + std::to_string(n) + " field elements, " +
                                         field.describe() + " has " + std::to_string(field.order()));
  }
  std::vector<FieldElem> x;
  std::vector<FieldElem> y;
  for (std::size_t i = 0; i < t; ++i) x.push_back(field.element(i));
  for (std::size_t j = t; j < n; ++j) y.push_back(field.element(j));
  return hstack(Mat::identity(field, t), cauchy(field, x, y));
}

Mat moore_matrix(const Field& field, std::span<const FieldElem> points, std::size_t rows,
                 std::uint64_t frobenius_base) {
  if (rows > points.size()) throw Error(Errc::DimensionMismatch, "moore_matrix: rows exceed point count");
  const Field sub = field.subfield(frobenius_base);
  std::vector<std::vector<FieldElem>> coords;
  for (auto p : points) coords.push_back(field.subfield_coordinates(p, frobenius_base));
  Mat coord_mat(sub, 0, coords.empty() ? 0 : coords.front().size());
  for (const auto& c : coords) coord_mat.append_row(c);
  if (rank(coord_mat) != points.size()) {
    throw Error(Errc::DependentPoints, "points are linearly dependent over the subfield of order " +
                                           std::to_string(frobenius_base));
  }
  Mat out(field, rows, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    FieldElem v = points[j];
    for (std::size_t i = 0; i < rows; ++i) {
      out.set(i, j, v);
      v = field.pow(v, frobenius_base);
    }
  }
  return out;
}

std::vector<FieldElem> default_points(const Field& field, std::size_t n) {
  if (field.order() < n + 1) {
    throw Error(Errc::FieldTooSmall, std::to_string(n) + " distinct nonzero points do not fit in " + field.describe());
  }
  std::vector<FieldElem> pts;
  for (std::size_t i = 1; i <= n; ++i) pts.push_back(field.element(i));
  return pts;
}

}  // namespace coopstore
