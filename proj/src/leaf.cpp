#include "siegel/leaf.hpp"

#include <algorithm>
#include <cmath>

#include "siegel/errors.hpp"

namespace siegel {

std::vector<std::complex<double>> flow(const Configuration& conf,
                                       const std::vector<std::complex<double>>& z,
                                       const Eigen::VectorXd& T) {
  if (static_cast<int>(z.size()) != conf.m() || T.size() != conf.d()) {
    throw DimensionMismatch("flow: sizes do not match the configuration");
  }
  const Eigen::MatrixXd a = conf.to_double();
  std::vector<std::complex<double>> out(z.size());
  for (int i = 0; i < conf.m(); ++i) {
    out[i] = z[i] * std::exp(a.col(i).dot(T));
  }
  return out;
}

double p_norm(const std::vector<std::complex<double>>& x, double p) {
  double top = 0.0;
  for (const auto& v : x) top = std::max(top, std::abs(v));
  if (top == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& v : x) sum += std::pow(std::abs(v) / top, p);
  return top * std::pow(sum, 1.0 / p);
}

namespace {

// Log-domain data of the objective phi(T) = (1/p) log sum_i exp(p a_i(T))
// with a_i = log|z_i| + <A_i, T> over the support of z.
struct Objective {
  Eigen::MatrixXd a;   // d x s, support columns of A
  Eigen::VectorXd logmod;  // s, log moduli of z on the support

  double phi(double p, const Eigen::VectorXd& T, Eigen::VectorXd* w) const {
    const Eigen::VectorXd vals = logmod + a.transpose() * T;
    const double top = vals.maxCoeff();
    Eigen::VectorXd e = (p * (vals.array() - top)).exp().matrix();
    const double total = e.sum();
    if (w != nullptr) *w = e / total;
    return top + std::log(total) / p;
  }
};

// One Newton run at fixed p from the given start.  Updates T in place and
// returns (residual, iterations used).
std::pair<double, int> newton_stage(const Objective& obj, double p,
                                    const SolverSettings& settings,
                                    Eigen::VectorXd& T) {
  const int d = static_cast<int>(obj.a.rows());
  Eigen::VectorXd w;
  double phi = obj.phi(p, T, &w);
  int used = 0;
  for (;; ++used) {
    const Eigen::VectorXd g = obj.a * w;
    const double residual = d == 0 ? 0.0 : g.lpNorm<Eigen::Infinity>();
    if (residual <= settings.tol) return {residual, used};
    if (used >= settings.max_iter) {
      throw SolverFailure("leaf minimisation did not converge");
    }

    // Damped Newton on the closed-form Hessian H = p (B - g g^T), with
    // B = sum_i w_i A_i A_i^T.  When the softmax weights saturate on few
    // columns H is nearly singular, so a Levenberg ridge (escalated until
    // the step is a finite descent direction) keeps the system solvable;
    // the ridge is negligible in the quadratic regime.
    const Eigen::MatrixXd b = obj.a * w.asDiagonal() * obj.a.transpose();
    const Eigen::MatrixXd h = p * (b - g * g.transpose());
    const double scale = h.trace() / d + 1.0;
    Eigen::VectorXd delta = -g;
    for (double ridge = 1e-12 * scale; ridge < 1e40 * scale; ridge *= 1e3) {
      Eigen::MatrixXd reg = h + ridge * Eigen::MatrixXd::Identity(d, d);
      Eigen::LDLT<Eigen::MatrixXd> ldlt(reg);
      if (ldlt.info() != Eigen::Success) continue;
      Eigen::VectorXd trial = ldlt.solve(-g);
      if (trial.allFinite() && g.dot(trial) < 0.0) {
        delta = std::move(trial);
        break;
      }
    }
    // Bound the trial step so a near-zero ridge cannot demand dozens of
    // backtracking halvings; the cap grows with |T|, so any minimiser is
    // still reachable in logarithmically many iterations.
    const double cap = 64.0 * (1.0 + T.lpNorm<Eigen::Infinity>());
    const double len = delta.lpNorm<Eigen::Infinity>();
    if (len > cap) delta *= cap / len;

    const double slope = g.dot(delta);
    if (phi + settings.ls_decrease * slope == phi) {
      // Endgame: the demanded Armijo decrease is below the floating-point
      // resolution of the objective, so value comparisons are pure noise.
      // Switch the acceptance test to the gradient itself; the full Newton
      // step contracts it quadratically from here.
      double step = 1.0;
      for (;;) {
        Eigen::VectorXd cand = T + step * delta;
        Eigen::VectorXd wc;
        const double val = obj.phi(p, cand, &wc);
        if ((obj.a * wc).lpNorm<Eigen::Infinity>() < residual) {
          T = std::move(cand);
          phi = val;
          w = std::move(wc);
          break;
        }
        step *= settings.ls_shrink;
        if (step < 1e-16) {
          throw SolverFailure("leaf minimisation line search stalled");
        }
      }
      continue;
    }

    Eigen::VectorXd cand = T + delta;
    Eigen::VectorXd wc;
    double val = obj.phi(p, cand, &wc);
    if (val <= phi + settings.ls_decrease * slope) {
      // Full step accepted: keep doubling while the value strictly improves.
      // Along saturated directions the objective is nearly affine and the
      // unit Newton step can be far shorter than the basin.
      for (double step = 1.0; step < 1e12;) {
        step *= 2.0;
        Eigen::VectorXd wide = T + step * delta;
        Eigen::VectorXd ww;
        const double wval = obj.phi(p, wide, &ww);
        if (!(wval < val)) break;
        cand = std::move(wide);
        val = wval;
        wc = std::move(ww);
      }
      T = std::move(cand);
      phi = val;
      w = std::move(wc);
    } else {
      double step = 1.0;
      for (;;) {
        step *= settings.ls_shrink;
        if (step < 1e-16) {
          throw SolverFailure("leaf minimisation line search stalled");
        }
        cand = T + step * delta;
        val = obj.phi(p, cand, &wc);
        if (val <= phi + settings.ls_decrease * step * slope) {
          T = std::move(cand);
          phi = val;
          w = std::move(wc);
          break;
        }
      }
    }
  }
}

Objective make_objective(const Configuration& conf, const AmbientPoint& point,
                         const std::vector<int>& support) {
  Objective obj;
  const Eigen::MatrixXd a = conf.to_double();
  obj.a.resize(conf.d(), static_cast<int>(support.size()));
  obj.logmod.resize(static_cast<int>(support.size()));
  for (size_t k = 0; k < support.size(); ++k) {
    obj.a.col(static_cast<int>(k)) = a.col(support[k]);
    obj.logmod[static_cast<int>(k)] = std::log(std::abs(point.z[support[k]]));
  }
  return obj;
}

}  // namespace

LeafMinimum minimize(const Configuration& conf, const AmbientPoint& point,
                     double p, const SolverSettings& settings) {
  if (p < 1.0) throw DimensionMismatch("p must be at least 1");
  const SiegelMembership membership = siegel_membership(conf, point);
  if (!membership.member) {
    throw NotInSiegelSet("minimisation needs a point of the Siegel set");
  }
  const Objective obj = make_objective(conf, point, membership.support);

  LeafMinimum out;
  out.p = p;
  Eigen::VectorXd T = Eigen::VectorXd::Zero(conf.d());
  if (settings.initial_T.has_value()) {
    if (settings.initial_T->size() != conf.d()) {
      throw DimensionMismatch("initial T has the wrong dimension");
    }
    T = *settings.initial_T;
  }

  // Cold starts at large p sit in a saturated region where Newton steps are
  // O(1/p); warm-starting through p = 2, 4, 8, ... keeps every stage in the
  // fast regime.
  std::vector<double> stages;
  if (!settings.initial_T.has_value() && p > 8.0) {
    for (double q = 2.0; q < p; q *= 2.0) stages.push_back(q);
  }
  stages.push_back(p);

  for (double q : stages) {
    auto [residual, used] = newton_stage(obj, q, settings, T);
    out.iterations += used;
    if (q == p) out.residual = residual;
  }
  out.T = std::move(T);
  out.minimizer = flow(conf, point.z, out.T);
  out.norm = p_norm(out.minimizer, p);
  return out;
}

RetractionResult retract(const Configuration& conf, const AmbientPoint& point,
                         double p, const SolverSettings& settings) {
  const LeafMinimum min = minimize(conf, point, p, settings);
  RetractionResult out;
  out.p = p;
  out.T = min.T;
  out.norm = min.norm;
  out.residual = min.residual;
  out.iterations = min.iterations;
  out.x.resize(min.minimizer.size());
  for (size_t i = 0; i < min.minimizer.size(); ++i) {
    out.x[i] = min.minimizer[i] / min.norm;
  }
  return out;
}

XapResidual xap_residual(const Configuration& conf, const AmbientPoint& point,
                         double p) {
  XapResidual out;
  const double norm = p_norm(point.z, p);
  out.norm = std::abs(norm - 1.0);
  const std::vector<int> support = point.support();
  if (support.empty() || conf.d() == 0) return out;  // empty moment sum
  const Objective obj = make_objective(conf, point, support);
  Eigen::VectorXd w;
  obj.phi(p, Eigen::VectorXd::Zero(conf.d()), &w);
  // w holds the softmax weights |x_i|^p / sum |x_j|^p; undo the
  // normalisation with norm^p, evaluated in the log domain.
  const Eigen::VectorXd g = obj.a * w;
  out.moment = g.lpNorm<Eigen::Infinity>() * std::exp(p * std::log(norm));
  return out;
}

ChartTriple chart_invert(const Configuration& conf, const AmbientPoint& point,
                         double p, const SolverSettings& settings) {
  const RetractionResult ret = retract(conf, point, p, settings);
  ChartTriple out;
  out.x = ret.x;
  out.T = -ret.T;
  out.r = ret.norm;
  return out;
}

}  // namespace siegel
