#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace macp {

using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(std::string_view text);  // "p/q" or "p"
std::string to_string(const Rational& q);

struct Vec2 {
  Rational x;
  Rational y;
};

inline Rational det(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

using VectorConfig = std::vector<Vec2>;

// Dense matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix from_columns(const VectorConfig& config);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  // Columns of a two-row matrix as plane vectors.
  VectorConfig columns() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

int rank(Matrix m);

// Product a*b; a.cols() must equal b.rows().
Matrix multiply(const Matrix& a, const Matrix& b);

}  // namespace macp
