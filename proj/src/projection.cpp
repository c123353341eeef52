#include "siegel/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "siegel/combinatorics.hpp"
#include "siegel/errors.hpp"

namespace siegel {

MomentAngleMembership mac_contains(const SimplicialComplex& complex,
                                   const AmbientPoint& point, double tol) {
  if (point.size() != complex.ground_size()) {
    throw DimensionMismatch("point size does not match the complex");
  }
  MomentAngleMembership out;
  out.coords_ok = true;
  for (int i = 0; i < point.size(); ++i) {
    const double mod = std::abs(point.z[i]);
    out.max_norm = std::max(out.max_norm, mod);
    if (mod > 1.0 + tol) out.coords_ok = false;
    if (mod < 1.0 - tol) {
      out.strict_set.push_back(i);
    } else {
      out.circle_set.push_back(i);
    }
  }
  out.norm_ok = std::abs(out.max_norm - 1.0) <= tol;
  out.face_ok = complex.contains(indices_to_mask(out.strict_set));
  out.carrier = out.strict_set;
  out.inside = out.norm_ok && out.coords_ok && out.face_ok;
  return out;
}

ProjectionResult project_combinatorial(const Configuration& conf,
                                       const SimplicialComplex& complex,
                                       const AmbientPoint& point,
                                       const ProjectionOptions& options) {
  const int m = conf.m();
  const int d = conf.d();
  const int n = conf.gale_dim();
  if (point.size() != m || complex.ground_size() != m) {
    throw DimensionMismatch("projection inputs do not match in size");
  }

  ProjectionResult out;
  const std::vector<int> support = point.support();
  for (int i = 0, k = 0; i < m; ++i) {
    if (k < static_cast<int>(support.size()) && support[k] == i) {
      ++k;
    } else {
      out.zero_set.push_back(i);
    }
  }
  // The zero set must be a face: this is exactly membership of z in the
  // Siegel set (the origin sits in the hull of the supported vectors).
  if (!complex.contains(indices_to_mask(out.zero_set))) {
    throw NotInSiegelSet("projection needs a point of the Siegel set");
  }

  const RatMatrix v = gale_dual(conf);
  const std::uint32_t zero_mask = indices_to_mask(out.zero_set);

  // Exact coordinates on the subspace W orthogonal to the zero set's Gale
  // vectors: rows of `basis` span W, and `gamma` maps x to the coordinates
  // of its orthogonal projection onto W.
  RatMatrix zero_rows(out.zero_set.size(), n);
  for (std::size_t r = 0; r < out.zero_set.size(); ++r) {
    for (int c = 0; c < n; ++c) {
      zero_rows.at(r, c) = v.at(c, out.zero_set[r]);
    }
  }
  const RatMatrix basis = nullspace_basis(zero_rows);
  const int k = static_cast<int>(basis.rows());
  auto gram = solve_exact_matrix(matmul(basis, basis.transposed()), basis);
  if (!gram.has_value()) {
    throw DegenerateSpan("projection: zero-set Gale vectors are dependent");
  }
  const RatMatrix& gamma = *gram;  // k x n

  // Link vertices: coordinates that can still be pushed strictly inside.
  std::vector<int> link_vertices;
  for (int j = 0; j < m; ++j) {
    if ((zero_mask & (1u << j)) != 0) continue;
    if (complex.contains(zero_mask | (1u << j))) link_vertices.push_back(j);
  }

  // Gale direction of the moduli, in W coordinates.
  Eigen::VectorXd log_moduli = Eigen::VectorXd::Zero(m);
  for (int i : support) log_moduli[i] = std::log(std::abs(point.z[i]));
  Eigen::MatrixXd vd(n, m);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < m; ++c) vd(r, c) = to_double(v.at(r, c));
  }
  Eigen::MatrixXd gamma_d(k, n);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < n; ++c) gamma_d(r, c) = to_double(gamma.at(r, c));
  }
  const Eigen::VectorXd nu = gamma_d * (vd * log_moduli);

  // Radial decomposition of nu against the boundary of the projected star
  // polytope.  That boundary is triangulated by the link of the zero set;
  // it need not coincide with the polytope's own facet structure (several
  // link simplices can be coplanar inside one facet), so nu = rho * nu0 is
  // resolved with nu0 in the relative interior of a LINK face: the cones
  // over the maximal link simplices tile the image space, and the winning
  // simplex is the one whose cone coordinates of nu are all nonnegative.
  out.u.assign(m, 0.0);
  std::vector<double>& u = out.u;
  if (k > 0) {
    const SimplicialComplex link = complex.link_of(zero_mask);
    std::vector<std::uint32_t> candidates = link.maximal_faces();
    if (options.facet_shuffle_seed.has_value()) {
      std::mt19937_64 shuffle_rng(*options.facet_shuffle_seed);
      std::shuffle(candidates.begin(), candidates.end(), shuffle_rng);
    }
    Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(k, m);
    for (int j : link_vertices) {
      for (int r = 0; r < k; ++r) {
        Rat acc = 0;
        for (int t = 0; t < n; ++t) acc += gamma.at(r, t) * v.at(t, j);
        pts(r, j) = -to_double(acc);
      }
    }
    const double nu_scale = 1.0 + nu.lpNorm<Eigen::Infinity>();
    double best_margin = -std::numeric_limits<double>::infinity();
    std::vector<int> best_face;
    Eigen::VectorXd best_c;
    for (const std::uint32_t mask : candidates) {
      const std::vector<int> face = mask_to_indices(mask);
      if (face.empty()) continue;
      Eigen::MatrixXd cols(k, static_cast<int>(face.size()));
      for (std::size_t t = 0; t < face.size(); ++t) {
        cols.col(static_cast<int>(t)) = pts.col(face[t]);
      }
      const Eigen::VectorXd c = cols.colPivHouseholderQr().solve(nu);
      if ((cols * c - nu).lpNorm<Eigen::Infinity>() > 1e-9 * nu_scale) {
        continue;  // nu is outside the span of this simplex
      }
      const double margin = c.minCoeff() / (1.0 + c.lpNorm<Eigen::Infinity>());
      if (margin > best_margin) {
        best_margin = margin;
        best_face = face;
        best_c = c;
      }
    }
    const bool trivial = nu.lpNorm<Eigen::Infinity>() <= 1e-12 * nu_scale;
    if ((best_face.empty() && !trivial) ||
        (!best_face.empty() && best_margin < -1e-9)) {
      throw SolverFailure("projection: no link face contains the direction");
    }
    if (!best_face.empty()) {
      const double trim = 1e-12 * (1.0 + best_c.lpNorm<Eigen::Infinity>());
      double rho = 0.0;
      for (Eigen::Index t = 0; t < best_c.size(); ++t) {
        if (best_c[t] > trim) rho += best_c[t];
      }
      out.rho = rho;
      for (std::size_t t = 0; t < best_face.size(); ++t) {
        if (best_c[static_cast<Eigen::Index>(t)] <= trim) continue;
        const int j = best_face[t];
        const double weight = best_c[static_cast<Eigen::Index>(t)] / rho;
        out.strict_set.push_back(j);
        out.mu.push_back(weight);
        u[j] = -rho * weight;
      }
    }
  }

  // Leaf correction on the zero set: x solves G x = V(chi log|z| - u) in the
  // span of the zero set's Gale vectors, making the reconstruction below
  // consistent.  (The component orthogonal to that span was matched by the
  // radial step.)
  Eigen::VectorXd correction = Eigen::VectorXd::Zero(m);
  if (!out.zero_set.empty()) {
    Eigen::MatrixXd g(n, out.zero_set.size());
    for (std::size_t c = 0; c < out.zero_set.size(); ++c) {
      g.col(c) = vd.col(out.zero_set[c]);
    }
    Eigen::VectorXd rhs = vd * log_moduli;
    for (int j : out.strict_set) rhs -= u[j] * vd.col(j);
    const Eigen::VectorXd x = g.colPivHouseholderQr().solve(rhs);
    for (std::size_t c = 0; c < out.zero_set.size(); ++c) {
      correction[out.zero_set[c]] = x[c];
    }
  }

  // Reconstruction: <A_i, T> = u_i + x_i - chi_i log|z_i| - c, with c fixed
  // by centering; then y = r * flow(z, T) with r = e^c.
  Eigen::VectorXd rhs(m);
  for (int i = 0; i < m; ++i) rhs[i] = u[i] + correction[i] - log_moduli[i];
  out.c = rhs.sum() / m;
  rhs.array() -= out.c;
  const Eigen::MatrixXd at = conf.to_double().transpose();  // m x d
  out.T_inf = Eigen::VectorXd::Zero(d);
  if (d > 0) out.T_inf = at.colPivHouseholderQr().solve(rhs);
  out.residual = (at * out.T_inf - rhs).lpNorm<Eigen::Infinity>();
  if (out.residual > 1e-9) {
    throw SolverFailure("projection reconstruction is inconsistent");
  }
  out.r = std::exp(out.c);
  out.phases.assign(m, std::complex<double>(1.0, 0.0));
  out.y.assign(m, 0.0);
  for (int i : support) {
    out.phases[i] = point.z[i] / std::abs(point.z[i]);
    out.y[i] = std::exp(u[i]) * out.phases[i];
  }
  out.sigma = out.zero_set;
  for (std::size_t t = 0; t < out.strict_set.size(); ++t) {
    if (out.mu[t] > 0.0) out.sigma.push_back(out.strict_set[t]);
  }
  std::sort(out.sigma.begin(), out.sigma.end());
  return out;
}

std::vector<double> default_p_schedule() {
  std::vector<double> out;
  for (double p = 2.0; p <= 1024.0; p *= 2.0) out.push_back(p);
  return out;
}

PlimitResult project_plimit(const Configuration& conf,
                            const AmbientPoint& point,
                            const std::vector<double>& schedule,
                            const SolverSettings& settings) {
  const std::vector<double> ps =
      schedule.empty() ? default_p_schedule() : schedule;
  if (ps.size() < 2) {
    throw DimensionMismatch("p schedule needs at least two values");
  }
  for (size_t i = 1; i < ps.size(); ++i) {
    if (ps[i] <= ps[i - 1]) {
      throw DimensionMismatch("p schedule must increase strictly");
    }
  }
  PlimitResult out;
  out.schedule = ps;
  Eigen::VectorXd prev_T;
  Eigen::VectorXd prev_prev_T;
  SolverSettings stage = settings;
  for (double p : ps) {
    const LeafMinimum min = minimize(conf, point, p, stage);
    out.total_iterations += min.iterations;
    if (prev_T.size() > 0) {
      out.increments.push_back((min.T - prev_T).lpNorm<Eigen::Infinity>());
    }
    prev_prev_T = prev_T;
    prev_T = min.T;
    stage.initial_T = min.T;  // warm start the next stage
  }
  out.T_raw = prev_T;

  // The exponents are affine in T, so the finite-p argument expands as
  // T_p = T_inf + v/p + sum_j D_j exp(-p g_j): a clean 1/p term (from the
  // tie set of the limiting max) plus exponentially small contributions of
  // the strictly contracted coordinates, with NO higher polynomial terms.
  // One Richardson step on the two largest p eliminates v/p exactly; the
  // leftover is O(exp(-p_min g_min)), negligible away from stratum walls.
  // Higher-order polynomial extrapolation would only amplify the
  // exponential tail and is deliberately avoided.
  const double pk = ps[ps.size() - 1];
  const double pj = ps[ps.size() - 2];
  out.T = (pk * prev_T - pj * prev_prev_T) / (pk - pj);

  const std::vector<std::complex<double>> f = flow(conf, point.z, out.T);
  double top = 0.0;
  for (const auto& value : f) top = std::max(top, std::abs(value));
  out.r = 1.0 / top;
  out.y.resize(f.size());
  for (size_t i = 0; i < f.size(); ++i) out.y[i] = f[i] * out.r;
  return out;
}

EscapeReport escape_check(const Configuration& conf,
                          const SimplicialComplex& complex,
                          const AmbientPoint& point,
                          const std::vector<double>& schedule,
                          const SolverSettings& settings) {
  double top = 0.0;
  for (const auto& value : point.z) top = std::max(top, std::abs(value));
  if (std::abs(top - 1.0) > 1e-9) {
    throw PreconditionFailure("escape probe needs sup norm exactly 1");
  }
  if (!siegel_membership(conf, point).member) {
    throw PreconditionFailure("escape probe needs a Siegel-set point");
  }
  if (mac_contains(complex, point).inside) {
    throw PreconditionFailure(
        "escape probe needs a point outside the moment-angle complex");
  }

  const std::vector<double> ps =
      schedule.empty() ? default_p_schedule() : schedule;
  EscapeReport out;
  SolverSettings stage = settings;
  for (double p : ps) {
    const LeafMinimum min = minimize(conf, point, p, stage);
    stage.initial_T = min.T;
    for (int i = 0; i < conf.m(); ++i) {
      const double excess = std::abs(min.minimizer[i]) - std::abs(point.z[i]);
      if (excess > 0.0 && (!out.escapes || excess > out.excess)) {
        out.escapes = true;
        out.p = p;
        out.coordinate = i;
        out.excess = excess;
      }
    }
    if (out.escapes) break;
  }
  return out;
}

std::vector<SweepRow> sweep(const Configuration& conf,
                            const AmbientPoint& point,
                            const std::vector<double>& schedule,
                            const SolverSettings& settings) {
  const std::vector<double> ps =
      schedule.empty() ? default_p_schedule() : schedule;
  std::vector<SweepRow> rows;
  SolverSettings stage = settings;
  for (double p : ps) {
    const LeafMinimum min = minimize(conf, point, p, stage);
    stage.initial_T = min.T;
    SweepRow row;
    row.p = p;
    row.T = min.T;
    row.fp_norm = min.norm;
    double top = 0.0;
    for (const auto& value : min.minimizer) {
      top = std::max(top, std::abs(value));
    }
    row.xp_inf = top / min.norm;
    row.residual = min.residual;
    row.iterations = min.iterations;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace siegel
