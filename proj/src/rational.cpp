#include "siegel/rational.hpp"

#include <cctype>

#include "siegel/errors.hpp"

namespace siegel {

namespace {

Int parse_integer(std::string text) {
  const auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (!text.empty() && is_space(text.front())) text.erase(text.begin());
  while (!text.empty() && is_space(text.back())) text.pop_back();
  if (text.empty()) throw ParseError("empty integer in rational literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ParseError("sign without digits: " + text);
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("invalid integer in rational literal: " + text);
    }
  }
  return Int(text);
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_integer(text));
  }
  const Int num = parse_integer(text.substr(0, slash));
  const Int den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator: " + text);
  return Rat(num) / Rat(den);  // division canonicalizes
}

std::string format_rational(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rat& value) { return value.convert_to<double>(); }

std::vector<Rat> RatMatrix::row(std::size_t r) const {
  std::vector<Rat> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

std::vector<Rat> RatMatrix::col(std::size_t c) const {
  std::vector<Rat> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matmul shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& av = a.at(r, k);
      if (av == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        out.at(r, c) += av * b.at(k, c);
      }
    }
  }
  return out;
}

std::vector<Rat> matvec(const RatMatrix& a, const std::vector<Rat>& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matvec shape mismatch");
  std::vector<Rat> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a.at(r, c) != 0 && x[c] != 0) out[r] += a.at(r, c) * x[c];
    }
  }
  return out;
}

RatMatrix with_ones_row(const RatMatrix& a) {
  RatMatrix out(a.rows() + 1, a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  for (std::size_t c = 0; c < a.cols(); ++c) out.at(a.rows(), c) = 1;
  return out;
}

std::size_t rref_in_place(RatMatrix& m, std::vector<std::size_t>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    // Smallest-index pivot: first row at or below pivot_row with a nonzero.
    std::size_t r = pivot_row;
    while (r < m.rows() && m.at(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m.at(r, j), m.at(pivot_row, j));
      }
    }
    const Rat inv = Rat(1) / m.at(pivot_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m.at(i, c) == 0) continue;
      const Rat factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m.at(i, j) -= factor * m.at(pivot_row, j);
      }
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++pivot_row;
  }
  return pivot_row;
}

std::size_t rat_rank(RatMatrix m) { return rref_in_place(m); }

RatMatrix nullspace_basis(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<std::size_t> pivots;
  const std::size_t rank = rref_in_place(r, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }

  RatMatrix basis(free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis.at(k, f) = 1;
    for (std::size_t pr = 0; pr < rank; ++pr) {
      basis.at(k, pivots[pr]) = -r.at(pr, f);
    }
  }
  return basis;
}

bool same_row_space(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) return false;
  RatMatrix ra = a, rb = b;
  const std::size_t rka = rref_in_place(ra);
  const std::size_t rkb = rref_in_place(rb);
  if (rka != rkb) return false;
  // rref is a canonical form of the row space: compare the nonzero rows.
  for (std::size_t r = 0; r < rka; ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (ra.at(r, c) != rb.at(r, c)) return false;
    }
  }
  return true;
}

std::optional<std::vector<Rat>> solve_exact(const RatMatrix& m,
                                            const std::vector<Rat>& rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch("solve_exact rhs size");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = rhs[r];
  }
  std::vector<std::size_t> pivots;
  const std::size_t rank = rref_in_place(aug, &pivots);
  // Inconsistent iff a pivot lands in the rhs column.
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rat> x(m.cols());
  for (std::size_t pr = 0; pr < rank; ++pr) {
    x[pivots[pr]] = aug.at(pr, m.cols());
  }
  return x;
}

std::optional<RatMatrix> solve_exact_matrix(const RatMatrix& lhs,
                                            const RatMatrix& rhs) {
  if (lhs.rows() != lhs.cols() || rhs.rows() != lhs.rows()) {
    throw DimensionMismatch("solve_exact_matrix shape");
  }
  const std::size_t k = lhs.rows();
  RatMatrix aug(k, k + rhs.cols());
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug.at(r, c) = lhs.at(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
      aug.at(r, k + c) = rhs.at(r, c);
    }
  }
  std::vector<std::size_t> pivots;
  const std::size_t rank = rref_in_place(aug, &pivots);
  if (rank != k) return std::nullopt;
  for (std::size_t pr = 0; pr < rank; ++pr) {
    if (pivots[pr] != pr) return std::nullopt;  // pivot escaped the lhs block
  }
  RatMatrix x(k, rhs.cols());
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
      x.at(r, c) = aug.at(r, k + c);
    }
  }
  return x;
}

}  // namespace siegel
