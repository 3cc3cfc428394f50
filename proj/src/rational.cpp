#include "macp/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "macp/error.hpp"

namespace macp {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("invalid rational '" + std::string(text) + "'");
  using boost::multiprecision::cpp_int;
  const cpp_int p(std::string(num[0] == '+' ? num.substr(1) : num));
  const cpp_int q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      throw ParseError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

Matrix Matrix::from_columns(const VectorConfig& config) {
  Matrix m(2, static_cast<int>(config.size()));
  for (int j = 0; j < m.cols(); ++j) {
    m.at(0, j) = config[static_cast<std::size_t>(j)].x;
    m.at(1, j) = config[static_cast<std::size_t>(j)].y;
  }
  return m;
}

VectorConfig Matrix::columns() const {
  if (rows_ != 2) throw RankDeficient("expected a matrix with two rows");
  VectorConfig out(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(j)] = {at(0, j), at(1, j)};
  return out;
}

int rank(Matrix m) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    for (int j = c; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, c) == 0) continue;
      const Rational f = m.at(i, c) / m.at(r, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not match");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

}  // namespace macp
