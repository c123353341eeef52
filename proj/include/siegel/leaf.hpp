#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "siegel/configuration.hpp"

namespace siegel {

struct SolverSettings {
  double tol = 1e-12;        // stop when the residual drops below this
  int max_iter = 200;        // Newton iteration budget per stage
  double ls_shrink = 0.5;    // backtracking factor
  double ls_decrease = 1e-4; // Armijo sufficient-decrease constant
  // Optional warm start; when absent the solver starts from T = 0 and, for
  // p > 8, walks an internal doubling ladder 2, 4, 8, ... up to p.
  std::optional<Eigen::VectorXd> initial_T;
};

// The flow of the leaf through z: (F_T z)_i = z_i * exp(<A_i, T>).
std::vector<std::complex<double>> flow(const Configuration& conf,
                                       const std::vector<std::complex<double>>& z,
                                       const Eigen::VectorXd& T);

// The p-norm, evaluated stably for large p.
double p_norm(const std::vector<std::complex<double>>& x, double p);

struct LeafMinimum {
  double p = 2.0;
  Eigen::VectorXd T;                        // unique critical argument
  std::vector<std::complex<double>> minimizer;  // flow(z, T)
  double norm = 0.0;                        // ||flow(z, T)||_p, the minimum
  double residual = 0.0;    // || sum_i w_i A_i ||_inf at T (softmax weights)
  int iterations = 0;
};

// Minimises ||flow(z, T)||_p over T in R^d for z in the Siegel set (throws
// NotInSiegelSet otherwise).  The objective is handled in log domain
// (max-subtracted log-sum-exp), so arbitrarily large p is safe.  The minimum
// exists and is unique because the support of z captures the origin in its
// hull and spans R^d.  Throws SolverFailure if the residual cannot be pushed
// below settings.tol.
LeafMinimum minimize(const Configuration& conf, const AmbientPoint& point,
                     double p, const SolverSettings& settings = {});

struct RetractionResult {
  double p = 2.0;
  std::vector<std::complex<double>> x;  // unit p-norm representative
  Eigen::VectorXd T;                    // minimising argument for z
  double norm = 0.0;                    // ||flow(z, T)||_p before scaling
  double residual = 0.0;
  int iterations = 0;
};

// Retraction onto the set X(p) = { x : ||x||_p = 1, T = 0 is critical }:
// x = flow(z, T*) / ||flow(z, T*)||_p.
RetractionResult retract(const Configuration& conf, const AmbientPoint& point,
                         double p, const SolverSettings& settings = {});

// Defect of x from the set X(p), split into its two defining equations.
struct XapResidual {
  double moment = 0.0;  // || sum_i A_i |x_i|^p ||_inf
  double norm = 0.0;    // | ||x||_p - 1 |
};

XapResidual xap_residual(const Configuration& conf, const AmbientPoint& point,
                         double p);

// Leaf coordinates of z: the unique triple with z = r * flow(x, T), where x
// has unit p-norm and is critical (x in X(p)).  Note T here is the inverse
// of the minimising argument: if T* minimises the leaf norm of z then
// T = -T* and r = ||flow(z, T*)||_p.
struct ChartTriple {
  std::vector<std::complex<double>> x;
  Eigen::VectorXd T;
  double r = 1.0;
};

ChartTriple chart_invert(const Configuration& conf, const AmbientPoint& point,
                         double p, const SolverSettings& settings = {});

}  // namespace siegel
