#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace siegel {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Accepts "p", "-p" and "p/q" with integer p, q and q != 0. The result is
// canonical (lowest terms, positive denominator).
Rat parse_rational(const std::string& text);

// Inverse of parse_rational: "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rat& value);

double to_double(const Rat& value);

// Dense row-major matrix over Rat.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::vector<Rat> row(std::size_t r) const;
  std::vector<Rat> col(std::size_t c) const;

  RatMatrix transposed() const;

  bool operator==(const RatMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);

std::vector<Rat> matvec(const RatMatrix& a, const std::vector<Rat>& x);

// Appends a row of ones; used for augmented tuples and affine constraints.
RatMatrix with_ones_row(const RatMatrix& a);

// In-place reduced row echelon form with the smallest-index pivot rule:
// scan columns left to right, pick the first row with a nonzero entry.
// Deterministic; returns the rank. Pivot columns are reported in order.
std::size_t rref_in_place(RatMatrix& m,
                          std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rat_rank(RatMatrix m);

// Rows form a basis of {x : m x = 0}. One basis vector per free column, in
// increasing column order, with a unit entry in its free coordinate.
// Deterministic by the rref pivot rule.
RatMatrix nullspace_basis(const RatMatrix& m);

bool same_row_space(const RatMatrix& a, const RatMatrix& b);

// Exact solution of m x = rhs; empty when inconsistent. Free coordinates are
// set to zero, so the answer is unique iff m has full column rank.
std::optional<std::vector<Rat>> solve_exact(const RatMatrix& m,
                                            const std::vector<Rat>& rhs);

// Solves lhs X = rhs column by column for square invertible lhs; empty when
// lhs is singular.
std::optional<RatMatrix> solve_exact_matrix(const RatMatrix& lhs,
                                            const RatMatrix& rhs);

}  // namespace siegel
