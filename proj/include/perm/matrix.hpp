#pragma once

// Dense rectangular matrices over an algebra, their text format, and the
// row split used by the disjoint-pair permanent algorithm.
//
// Text format:
//   # comment lines start with '#'
//   <m> <n>
//   m lines of n whitespace-separated element tokens
//
// Indices are 0-based in the API; row i and column j of the text file are
// at(i - 1, j - 1).

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "perm/algebra.hpp"
#include "perm/error.hpp"
#include "perm/subsets.hpp"

namespace perm {

template <Semiring A>
class Matrix {
 public:
  using Algebra = A;
  using Element = typename A::Element;

  Matrix(A algebra, std::size_t rows, std::size_t cols)
      : Matrix(algebra, rows, cols, std::vector<Element>(rows * cols, algebra.zero())) {}

  Matrix(A algebra, std::size_t rows, std::size_t cols, std::vector<Element> entries)
      : algebra_(std::move(algebra)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows > kMaxGround || cols > kMaxGround) throw DomainError("matrix dimensions are limited to 62");
    if (entries_.size() != rows * cols) throw DomainError("entry count does not match dimensions");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const A& algebra() const { return algebra_; }

  const Element& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Element& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  const std::vector<Element>& entries() const { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  A algebra_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

template <Semiring A>
Matrix<A> make_matrix(const A& alg, const std::vector<std::vector<typename A::Element>>& rows) {
  std::size_t m = rows.size();
  std::size_t n = m == 0 ? 0 : rows.front().size();
  std::vector<typename A::Element> entries;
  entries.reserve(m * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw DomainError("ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix<A>(alg, m, n, std::move(entries));
}

namespace detail {

// Splits `text` into non-comment, non-blank lines.
std::vector<std::string> content_lines(std::string_view text);
std::vector<std::string_view> split_tokens(std::string_view line);
std::pair<std::size_t, std::size_t> parse_dimensions(std::string_view line);

}  // namespace detail

template <Semiring A>
Matrix<A> parse_matrix(std::string_view text, const A& alg) {
  std::vector<std::string> lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("missing dimension line");
  auto [m, n] = detail::parse_dimensions(lines.front());
  std::size_t expected_lines = n == 0 ? 0 : m;
  if (lines.size() - 1 != expected_lines)
    throw ParseError("expected " + std::to_string(m) + " rows, found " + std::to_string(lines.size() - 1));
  std::vector<typename A::Element> entries;
  entries.reserve(m * n);
  for (std::size_t i = 0; i < expected_lines; ++i) {
    auto tokens = detail::split_tokens(lines[i + 1]);
    if (tokens.size() != n)
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(tokens.size()) +
                       " entries, expected " + std::to_string(n));
    for (std::string_view tok : tokens) entries.push_back(alg.parse(tok));
  }
  return Matrix<A>(alg, m, n, std::move(entries));
}

template <Semiring A>
std::string render_matrix(const Matrix<A>& a) {
  std::ostringstream out;
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ' ';
      out << a.algebra().render(a.at(i, j));
    }
    out << '\n';
  }
  return out.str();
}

// Rows and columns selected by the masks, in increasing original order.
template <Semiring A>
Matrix<A> submatrix(const Matrix<A>& a, SubsetMask rows, SubsetMask cols) {
  if ((rows & ~full_mask(static_cast<unsigned>(a.rows()))) || (cols & ~full_mask(static_cast<unsigned>(a.cols()))))
    throw DomainError("submatrix mask outside the matrix");
  std::vector<typename A::Element> entries;
  entries.reserve(cardinality(rows) * cardinality(cols));
  for (SubsetMask r = rows; r; r &= r - 1) {
    unsigned i = static_cast<unsigned>(std::countr_zero(r));
    for (SubsetMask c = cols; c; c &= c - 1) entries.push_back(a.at(i, static_cast<unsigned>(std::countr_zero(c))));
  }
  return Matrix<A>(a.algebra(), cardinality(rows), cardinality(cols), std::move(entries));
}

// Top block K = first k1 = ceil(m/2) rows, bottom block L = remaining k2.
struct SplitPlan {
  unsigned k1 = 0;
  unsigned k2 = 0;

  SubsetMask top_rows() const { return full_mask(k1); }
  SubsetMask bottom_rows() const { return full_mask(k1 + k2) & ~full_mask(k1); }
};

inline SplitPlan make_split_plan(unsigned m) { return {(m + 1) / 2, m / 2}; }

}  // namespace perm
