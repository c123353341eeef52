#include "siegel/linprog.hpp"

#include <cstddef>
#include <limits>

#include "siegel/errors.hpp"

namespace siegel {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau: rows[r] = [coefficients | rhs], basis[r] = basic variable.
struct Tableau {
  std::size_t nvars = 0;
  std::vector<std::vector<Rat>> rows;
  std::vector<std::size_t> basis;

  Rat& coef(std::size_t r, std::size_t j) { return rows[r][j]; }
  Rat& rhs(std::size_t r) { return rows[r][nvars]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rat inv = Rat(1) / coef(pr, pc);
    for (auto& v : rows[pr]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pr || coef(r, pc) == 0) continue;
      const Rat f = coef(r, pc);
      for (std::size_t j = 0; j <= nvars; ++j) rows[r][j] -= f * rows[pr][j];
    }
    basis[pr] = pc;
  }
};

// Runs simplex to optimality for min cost.x; returns false on unboundedness.
bool run_simplex(Tableau& t, const std::vector<Rat>& cost) {
  for (;;) {
    // Bland: enter the smallest index with a negative reduced cost.
    std::size_t enter = kNone;
    for (std::size_t j = 0; j < t.nvars && enter == kNone; ++j) {
      Rat reduced = cost[j];
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (t.coef(r, j) != 0) reduced -= cost[t.basis[r]] * t.coef(r, j);
      }
      if (reduced < 0) enter = j;
    }
    if (enter == kNone) return true;

    // Ratio test; ties broken by the smallest basic variable index.
    std::size_t leave = kNone;
    Rat best;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      const Rat& a = t.coef(r, enter);
      if (a <= 0) continue;
      const Rat ratio = t.rhs(r) / a;
      if (leave == kNone || ratio < best ||
          (ratio == best && t.basis[r] < t.basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == kNone) return false;
    t.pivot(leave, enter);
  }
}

}  // namespace

LpResult solve_lp(const RatMatrix& a, const std::vector<Rat>& b,
                  const std::vector<Rat>& c) {
  const std::size_t k = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != k) throw DimensionMismatch("solve_lp: rhs size");
  if (c.size() != n) throw DimensionMismatch("solve_lp: cost size");

  Tableau t;
  t.nvars = n + k;  // original variables + one artificial per row
  t.rows.assign(k, std::vector<Rat>(t.nvars + 1));
  t.basis.resize(k);
  for (std::size_t r = 0; r < k; ++r) {
    const bool flip = b[r] < 0;  // keep rhs nonnegative
    for (std::size_t j = 0; j < n; ++j) {
      t.rows[r][j] = flip ? -a.at(r, j) : a.at(r, j);
    }
    t.rows[r][n + r] = 1;
    t.rows[r][t.nvars] = flip ? -b[r] : b[r];
    t.basis[r] = n + r;
  }

  // Phase 1: minimize the sum of artificials.
  std::vector<Rat> phase1_cost(t.nvars);
  for (std::size_t j = n; j < t.nvars; ++j) phase1_cost[j] = 1;
  run_simplex(t, phase1_cost);  // bounded below by 0, never unbounded

  Rat infeasibility;
  for (std::size_t r = 0; r < k; ++r) {
    if (t.basis[r] >= n) infeasibility += t.rhs(r);
  }
  if (infeasibility > 0) return {LpStatus::kInfeasible, Rat(0), {}};

  // Drive surviving (degenerate) artificials out of the basis, or drop the
  // redundant rows they witness.
  for (std::size_t r = 0; r < t.rows.size();) {
    if (t.basis[r] < n) {
      ++r;
      continue;
    }
    std::size_t pc = kNone;
    for (std::size_t j = 0; j < n && pc == kNone; ++j) {
      if (t.coef(r, j) != 0) pc = j;
    }
    if (pc != kNone) {
      t.pivot(r, pc);
      ++r;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }

  // Phase 2 on the original columns only.
  for (auto& row : t.rows) {
    row.erase(row.begin() + static_cast<std::ptrdiff_t>(n), row.end() - 1);
  }
  t.nvars = n;
  if (!run_simplex(t, c)) return {LpStatus::kUnbounded, Rat(0), {}};

  LpResult out;
  out.status = LpStatus::kOptimal;
  out.x.assign(n, Rat(0));
  for (std::size_t r = 0; r < t.rows.size(); ++r) out.x[t.basis[r]] = t.rhs(r);
  for (std::size_t j = 0; j < n; ++j) {
    if (out.x[j] != 0) out.objective += c[j] * out.x[j];
  }
  return out;
}

}  // namespace siegel
