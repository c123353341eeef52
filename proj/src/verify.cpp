#include "siegel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "siegel/combinatorics.hpp"
#include "siegel/errors.hpp"
#include "siegel/geometry.hpp"
#include "siegel/leaf.hpp"
#include "siegel/projection.hpp"
#include "siegel/sampling.hpp"

namespace siegel {

namespace {

Configuration permuted(const Configuration& conf, const std::vector<int>& pi) {
  return Configuration(conf.submatrix(pi));
}

double sup_diff(const std::vector<std::complex<double>>& a,
                const std::vector<std::complex<double>>& b) {
  double out = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    out = std::max(out, std::abs(a[i] - b[i]));
  }
  return out;
}

void validate_permutation(const std::vector<int>& pi, int m) {
  if (static_cast<int>(pi.size()) != m) {
    throw DimensionMismatch("permutation has the wrong length");
  }
  std::vector<bool> hit(m, false);
  for (int v : pi) {
    if (v < 0 || v >= m || hit[v]) {
      throw DimensionMismatch("not a permutation");
    }
    hit[v] = true;
  }
}

}  // namespace

RigidityReport rigidity_check(const Configuration& conf,
                              const Configuration& other,
                              const std::vector<int>& phi, int n_samples,
                              std::uint64_t seed, double p, double tol) {
  const int m = conf.m();
  if (other.m() != m) {
    throw DimensionMismatch("configurations must share the ground set size");
  }
  validate_permutation(phi, m);
  if (!verify_isomorphism(build_complex(conf), build_complex(other), phi)) {
    throw InvalidFace("phi is not an isomorphism of the two complexes");
  }

  std::mt19937_64 rng(seed);
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  RigidityReport report;
  report.permutation = phi;
  report.samples = n_samples;
  for (int s = 0; s < n_samples; ++s) {
    // Moduli uniform in [1/2, 2], phases uniform; keep only Siegel points
    // (full support always qualifies, so this terminates immediately).
    AmbientPoint z;
    do {
      z.z.assign(m, 0.0);
      for (int i = 0; i < m; ++i) {
        const double mod = 0.5 + 1.5 * uniform_unit(rng);
        const double arg = kTwoPi * uniform_unit(rng);
        z.z[i] = std::polar(mod, arg);
      }
    } while (!siegel_membership(conf, z).member);

    AmbientPoint x;
    x.z = retract(conf, z, p).x;
    AmbientPoint forward;
    forward.z.assign(m, 0.0);
    for (int i = 0; i < m; ++i) forward.z[phi[i]] = x.z[i];
    const auto there = retract(other, forward, p).x;
    AmbientPoint back;
    back.z.assign(m, 0.0);
    for (int i = 0; i < m; ++i) back.z[i] = there[phi[i]];
    const auto round = retract(conf, back, p).x;
    report.diagram_residual =
        std::max(report.diagram_residual, sup_diff(round, x.z));
  }
  report.passed = report.diagram_residual <= tol;
  return report;
}

namespace {

// Real-point retraction used for differentiation: feeds the real vector in
// as a complex point and returns the real parts (strata probed here are
// preserved by the flow, so imaginary parts stay zero).
Eigen::VectorXd retract_real(const Configuration& conf,
                             const Eigen::VectorXd& x, double p) {
  AmbientPoint point;
  point.z.resize(x.size());
  for (int i = 0; i < x.size(); ++i) point.z[i] = x[i];
  const auto image = retract(conf, point, p).x;
  Eigen::VectorXd out(x.size());
  for (int i = 0; i < x.size(); ++i) out[i] = image[i].real();
  return out;
}

Eigen::MatrixXd fd_jacobian(const Configuration& conf,
                            const Eigen::VectorXd& base,
                            const std::vector<Eigen::VectorXd>& directions,
                            double h, double p) {
  Eigen::MatrixXd jac(conf.m(), static_cast<int>(directions.size()));
  for (size_t k = 0; k < directions.size(); ++k) {
    const Eigen::VectorXd plus = retract_real(conf, base + h * directions[k], p);
    const Eigen::VectorXd minus =
        retract_real(conf, base - h * directions[k], p);
    jac.col(static_cast<int>(k)) = (plus - minus) / (2.0 * h);
  }
  return jac;
}

std::vector<double> singular_values(const Eigen::MatrixXd& jac) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  std::vector<double> out(svd.singularValues().data(),
                          svd.singularValues().data() +
                              svd.singularValues().size());
  return out;
}

int rank_of(const std::vector<double>& svs) {
  if (svs.empty() || svs.front() <= 0.0) return 0;
  int rank = 0;
  for (double s : svs) {
    if (s >= 1e-6 * svs.front()) ++rank;
  }
  return rank;
}

bool ambiguous(const std::vector<double>& svs) {
  if (svs.empty() || svs.front() <= 0.0) return false;
  for (double s : svs) {
    const double rel = s / svs.front();
    if (rel > 1e-8 && rel < 1e-4) return true;
  }
  return false;
}

}  // namespace

JacobianCertificate jacobian_rank(const Configuration& conf,
                                  const SimplicialComplex& complex,
                                  const Stratum& stratum,
                                  const std::vector<double>& point, double h,
                                  double p) {
  const int m = conf.m();
  if (static_cast<int>(point.size()) != m) {
    throw DimensionMismatch("stratum point has the wrong length");
  }
  JacobianCertificate cert;
  cert.stratum = stratum;
  cert.point = point;
  constexpr double kOnStratumTol = 1e-9;

  Eigen::VectorXd base(m);
  for (int i = 0; i < m; ++i) base[i] = point[i];
  std::vector<Eigen::VectorXd> directions;
  if (stratum.kind == Stratum::Kind::kCubeFace) {
    if (!complex.contains(stratum.face)) {
      throw InvalidFace("cube stratum needs a face of the complex");
    }
    const std::uint32_t mask = indices_to_mask(stratum.face);
    for (int i = 0; i < m; ++i) {
      const bool free = (mask & (1u << i)) != 0;
      if (free ? std::abs(base[i]) > 1.0 - kOnStratumTol
               : std::abs(std::abs(base[i]) - 1.0) > kOnStratumTol) {
        throw PreconditionFailure("point is off the cube stratum");
      }
    }
    for (int i : stratum.face) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(m);
      e[i] = 1.0;
      directions.push_back(std::move(e));
    }
    cert.expected_rank = static_cast<int>(stratum.face.size());
  } else {
    double low = 1.0;
    Eigen::VectorXd moment = Eigen::VectorXd::Zero(conf.d());
    const Eigen::MatrixXd a = conf.to_double();
    for (int i = 0; i < m; ++i) {
      low = std::min(low, base[i]);
      if (conf.d() > 0) moment += base[i] * a.col(i);
    }
    const double drift =
        std::abs(base.sum() - 1.0) +
        (conf.d() > 0 ? moment.lpNorm<Eigen::Infinity>() : 0.0);
    if (low <= kOnStratumTol || drift > kOnStratumTol) {
      throw PreconditionFailure("point is off the orthant stratum");
    }
    h = std::min(h, low / 10.0);
    // Tangent space of the certificate polytope: the Gale dual rows span
    // { v : sum v_i A_i = 0, sum v_i = 0 }; orthonormalise for conditioning.
    const RatMatrix v = gale_dual(conf);
    const int n = static_cast<int>(v.rows());
    if (n > 0) {
      Eigen::MatrixXd vt(m, n);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < m; ++c) vt(c, r) = to_double(v.at(r, c));
      }
      const Eigen::MatrixXd q =
          Eigen::HouseholderQR<Eigen::MatrixXd>(vt).householderQ() *
          Eigen::MatrixXd::Identity(m, n);
      for (int k = 0; k < n; ++k) directions.push_back(q.col(k));
    }
    cert.expected_rank = n;
  }
  cert.step = h;

  if (directions.empty()) {
    cert.rank = 0;
    cert.pass = cert.expected_rank == 0;
    return cert;
  }

  Eigen::MatrixXd jac = fd_jacobian(conf, base, directions, h, p);
  cert.singular_values = singular_values(jac);
  if (ambiguous(cert.singular_values)) {
    const Eigen::MatrixXd fine = fd_jacobian(conf, base, directions, h / 2, p);
    jac = (4.0 * fine - jac) / 3.0;
    cert.singular_values = singular_values(jac);
    cert.richardson = true;
  }
  cert.rank = rank_of(cert.singular_values);
  cert.pass = cert.rank == cert.expected_rank;
  return cert;
}

namespace {

Configuration example_configuration() {
  RatMatrix a(2, 5);
  a.at(0, 0) = 0;
  a.at(0, 1) = 0;
  a.at(0, 2) = 1;
  a.at(0, 3) = 1;
  a.at(0, 4) = -2;
  a.at(1, 0) = 1;
  a.at(1, 1) = Rat(1) / 2;
  a.at(1, 2) = 0;
  a.at(1, 3) = 0;
  a.at(1, 4) = Rat(-3) / 2;
  return Configuration(std::move(a));
}

RatMatrix non_hyperbolic_matrix() {
  RatMatrix a(2, 4);
  a.at(0, 0) = 0;
  a.at(0, 1) = 0;
  a.at(0, 2) = 1;
  a.at(0, 3) = -1;
  a.at(1, 0) = 1;
  a.at(1, 1) = -1;
  a.at(1, 2) = 0;
  a.at(1, 3) = 0;
  return a;
}

struct SuiteContext {
  std::uint64_t seed = 0;
  std::vector<CheckResult>* out = nullptr;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    out->push_back({name, pass, detail});
  }
};

std::string cfg_tag(const Configuration& conf, size_t index) {
  std::ostringstream os;
  os << "cfg" << index << "(d=" << conf.d() << ",m=" << conf.m() << ")";
  return os.str();
}

std::string fmt(double value) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << value;
  return os.str();
}

void admissibility_suite(SuiteContext& ctx) {
  const Configuration example = example_configuration();
  const AdmissibilityReport ex = admissibility(example);
  ctx.add("example admissible",
          ex.admissible && ex.siegel_certificate.has_value() &&
              certificate_is_valid(example.matrix(), *ex.siegel_certificate));

  Configuration bad = gale_transform(
      nullspace_basis(with_ones_row(non_hyperbolic_matrix())));
  // gale_transform of the Gale dual reproduces the row space, so this
  // rebuilds a centered copy of the non-hyperbolic matrix.
  const AdmissibilityReport bad_report =
      admissibility(Configuration(non_hyperbolic_matrix()));
  ctx.add("violation detected",
          bad_report.siegel && !bad_report.weakly_hyperbolic &&
              bad_report.violating_subset.has_value() &&
              bad_report.violating_subset->size() == 2 &&
              certificate_is_valid(
                  Configuration(non_hyperbolic_matrix())
                      .submatrix(*bad_report.violating_subset),
                  *bad_report.violating_certificate));
  ctx.add("violation row space stable",
          !admissibility(bad).weakly_hyperbolic);

  std::mt19937_64 rng(ctx.seed);
  const auto corpus = standard_corpus(ctx.seed);
  for (size_t i = 0; i < corpus.size(); ++i) {
    const Configuration& conf = corpus[i];
    const std::string tag = cfg_tag(conf, i);
    const AdmissibilityReport rep = admissibility(conf);
    ctx.add(tag + " admissible with certificate",
            rep.admissible && certificate_is_valid(conf.matrix(),
                                                   *rep.siegel_certificate));

    const RatMatrix v = gale_dual(conf);
    bool round = false;
    std::string detail;
    try {
      const Configuration back = gale_transform(v, conf.d());
      round = same_row_space(back.matrix(), conf.matrix()) &&
              gale_dual(back) == v;
    } catch (const Error& err) {
      detail = err.what();
    }
    ctx.add(tag + " gale round trip", round, detail);

    const std::vector<int> pi = random_permutation(rng, conf.m());
    ctx.add(tag + " relabel invariance",
            admissibility(permuted(conf, pi)).admissible == rep.admissible);
  }
}

void combinatorics_suite(SuiteContext& ctx) {
  const Configuration example = example_configuration();
  const SimplicialComplex example_k = build_complex(example);
  ctx.add("example maximal faces",
          example_k.maximal_faces() ==
              std::vector<std::uint32_t>{0b00101, 0b00110, 0b01001, 0b01010});
  ctx.add("example f-vector",
          example_k.f_vector() == std::vector<int>{1, 4, 4});

  std::mt19937_64 rng(ctx.seed);
  const auto corpus = standard_corpus(ctx.seed);
  for (size_t i = 0; i < corpus.size(); ++i) {
    const Configuration& conf = corpus[i];
    const std::string tag = cfg_tag(conf, i);
    const SimplicialComplex k = build_complex(conf);

    bool closed = k.contains(std::uint32_t{0});
    bool bounded = true;
    for (std::uint32_t face : k.faces()) {
      if (mask_size(face) > conf.gale_dim()) bounded = false;
      for (std::uint32_t rest = face; rest != 0;) {
        const std::uint32_t low = rest & (~rest + 1);
        if (!k.contains(face & ~low)) closed = false;
        rest &= ~low;
      }
    }
    ctx.add(tag + " downward closed", closed);
    ctx.add(tag + " dimension bound", bounded);

    const PolytopeRealization real = realize_polytope(conf, k);
    ctx.add(tag + " polytope boundary", real.boundary_matches, real.detail);

    const std::vector<int> pi = random_permutation(rng, conf.m());
    ctx.add(tag + " relabelled complex",
            verify_isomorphism(build_complex(permuted(conf, pi)), k, pi));
  }
}

void minimization_suite(SuiteContext& ctx) {
  std::mt19937_64 rng(ctx.seed);
  const auto corpus = standard_corpus(ctx.seed);
  for (size_t i = 0; i < corpus.size(); ++i) {
    const Configuration& conf = corpus[i];
    const std::string tag = cfg_tag(conf, i);
    const AmbientPoint z = random_point(rng, conf);
    for (const double p : {2.0, 7.5}) {
      const std::string ptag = tag + " p=" + (p == 2.0 ? "2" : "7.5");
      const LeafMinimum min = minimize(conf, z, p);
      ctx.add(ptag + " residual", min.residual <= 1e-12, fmt(min.residual));

      SolverSettings restart;
      Eigen::VectorXd t0(conf.d());
      for (int r = 0; r < conf.d(); ++r) t0[r] = 4.0 * uniform_unit(rng) - 2.0;
      restart.initial_T = t0;
      const LeafMinimum again = minimize(conf, z, p, restart);
      const double drift = conf.d() == 0
                               ? 0.0
                               : (again.T - min.T).lpNorm<Eigen::Infinity>();
      ctx.add(ptag + " unique minimum", drift <= 1e-8, fmt(drift));
    }

    const RetractionResult ret = retract(conf, z, 2.0);
    AmbientPoint xhat;
    xhat.z = ret.x;
    const XapResidual res = xap_residual(conf, xhat, 2.0);
    const double defect = std::max(res.moment, res.norm);
    ctx.add(tag + " retraction lands on target", defect <= 1e-9, fmt(defect));
    const double repeat = sup_diff(retract(conf, xhat, 2.0).x, ret.x);
    ctx.add(tag + " retraction idempotent", repeat <= 1e-9, fmt(repeat));

    const ChartTriple chart = chart_invert(conf, z, 2.0);
    AmbientPoint xc;
    xc.z = chart.x;
    std::vector<std::complex<double>> back = flow(conf, chart.x, chart.T);
    for (auto& value : back) value *= chart.r;
    const double chart_err = sup_diff(back, z.z);
    ctx.add(tag + " chart reconstruction", chart_err <= 1e-9, fmt(chart_err));

    AmbientPoint scaled = z;
    for (auto& value : scaled.z) value *= 3.0;
    const LeafMinimum base = minimize(conf, z, 2.0);
    const LeafMinimum big = minimize(conf, scaled, 2.0);
    const double t_drift =
        conf.d() == 0 ? 0.0 : (big.T - base.T).lpNorm<Eigen::Infinity>();
    const double scale_err = std::abs(big.norm / base.norm - 3.0);
    ctx.add(tag + " scale equivariance",
            t_drift <= 1e-9 && scale_err <= 1e-9,
            fmt(t_drift) + "," + fmt(scale_err));
  }
}

void projection_suite(SuiteContext& ctx) {
  std::mt19937_64 rng(ctx.seed);
  const auto corpus = standard_corpus(ctx.seed);
  for (size_t i = 0; i < corpus.size(); ++i) {
    const Configuration& conf = corpus[i];
    const std::string tag = cfg_tag(conf, i);
    const SimplicialComplex k = build_complex(conf);

    const AmbientPoint full = random_point(rng, conf);
    const AmbientPoint strat = random_stratum_point(rng, conf, k);
    int which = 0;
    for (const AmbientPoint& z : {full, strat}) {
      const std::string ztag =
          tag + (which++ == 0 ? " generic" : " stratum");
      const ProjectionResult proj = project_combinatorial(conf, k, z);
      ctx.add(ztag + " image in complex",
              mac_contains(k, AmbientPoint{proj.y, z.zero_threshold}).inside);

      std::vector<std::complex<double>> recon = flow(conf, z.z, proj.T_inf);
      for (auto& value : recon) value *= proj.r;
      const double rec_err = sup_diff(recon, proj.y);
      ctx.add(ztag + " leaf reconstruction", rec_err <= 1e-9, fmt(rec_err));

      ProjectionOptions shuffled;
      shuffled.facet_shuffle_seed = 0x5eedULL + which;
      const ProjectionResult again =
          project_combinatorial(conf, k, z, shuffled);
      const double stable = std::max(
          {sup_diff(again.y, proj.y),
           conf.d() == 0 ? 0.0
                         : (again.T_inf - proj.T_inf).lpNorm<Eigen::Infinity>(),
           std::abs(again.r - proj.r)});
      ctx.add(ztag + " scan-order independent", stable <= 1e-12, fmt(stable));

      const ProjectionResult fixed =
          project_combinatorial(conf, k, AmbientPoint{proj.y, z.zero_threshold});
      const double idem =
          std::max({sup_diff(fixed.y, proj.y),
                    conf.d() == 0 ? 0.0 : fixed.T_inf.lpNorm<Eigen::Infinity>(),
                    std::abs(fixed.r - 1.0)});
      ctx.add(ztag + " idempotent", idem <= 1e-9, fmt(idem));
    }

    // The analytic route keeps a residual mode of size exp(-p_max * gap),
    // where gap is the distance of the strictly contracted log-moduli from
    // the maximum; no finite schedule resolves a draw hugging a stratum
    // wall.  Compare the two routes on a draw in general position, reading
    // the gap off the combinatorial output alone.
    AmbientPoint probe = full;
    ProjectionResult proj = project_combinatorial(conf, k, probe);
    for (int tries = 0; tries < 32; ++tries) {
      double gap = std::numeric_limits<double>::infinity();
      for (double ui : proj.u) {
        if (ui < -1e-9) gap = std::min(gap, -ui);
      }
      if (gap >= 0.02) break;
      probe = random_point(rng, conf);
      proj = project_combinatorial(conf, k, probe);
    }
    const PlimitResult pl = project_plimit(conf, probe);
    const double t_gap =
        conf.d() == 0 ? 0.0 : (pl.T - proj.T_inf).lpNorm<Eigen::Infinity>();
    const double y_gap = sup_diff(pl.y, proj.y);
    ctx.add(tag + " analytic route agrees", t_gap <= 1e-6 && y_gap <= 1e-5,
            fmt(t_gap) + "," + fmt(y_gap));

    const auto escape = boundary_escape_point(rng, conf, k);
    if (escape.has_value()) {
      ctx.add(tag + " escape witnessed",
              escape_check(conf, k, *escape).escapes);
    } else {
      ctx.add(tag + " escape vacuous (no proper non-face)", true);
    }
  }
}

void rigidity_suite(SuiteContext& ctx) {
  std::mt19937_64 rng(ctx.seed);

  // Identity diagram on the worked example.
  const Configuration example = example_configuration();
  std::vector<int> identity(example.m());
  std::iota(identity.begin(), identity.end(), 0);
  const RigidityReport self =
      rigidity_check(example, example, identity, 4, ctx.seed);
  ctx.add("example self diagram", self.passed, fmt(self.diagram_residual));

  // Swapping the example's duplicate columns (columns 2 and 3 carry the
  // same vector) is a symmetry, hence an exact isomorphism.
  std::vector<int> swap = identity;
  std::swap(swap[2], swap[3]);
  const RigidityReport swapped =
      rigidity_check(example, example, swap, 4, ctx.seed + 1);
  ctx.add("example duplicate-column swap", swapped.passed,
          fmt(swapped.diagram_residual));

  const auto corpus = standard_corpus(ctx.seed);
  for (size_t i = 0; i < corpus.size(); ++i) {
    const Configuration& conf = corpus[i];
    const std::string tag = cfg_tag(conf, i);
    const std::vector<int> pi = random_permutation(rng, conf.m());
    // With B_j = A_{pi(j)}, vertex i of the first complex maps to the
    // position of i inside pi.
    std::vector<int> phi(conf.m());
    for (int j = 0; j < conf.m(); ++j) phi[pi[j]] = j;

    const RigidityReport rep =
        rigidity_check(conf, permuted(conf, pi), phi, 3, ctx.seed + i);
    ctx.add(tag + " permuted diagram", rep.passed,
            fmt(rep.diagram_residual));

    // The Gale dual of the relabelled configuration must span the
    // relabelled kernel.
    const RatMatrix v = gale_dual(conf);
    RatMatrix v_pi(v.rows(), v.cols());
    for (std::size_t r = 0; r < v.rows(); ++r) {
      for (std::size_t c = 0; c < v.cols(); ++c) {
        v_pi.at(r, c) = v.at(r, pi[c]);
      }
    }
    ctx.add(tag + " gale relabel",
            same_row_space(gale_dual(permuted(conf, pi)), v_pi));
  }
}

void jacobian_suite(SuiteContext& ctx) {
  std::vector<Configuration> confs;
  confs.push_back(example_configuration());
  const auto corpus = standard_corpus(ctx.seed);
  for (const Configuration& conf : corpus) {
    if (conf.d() >= 1 && conf.d() <= 2 && conf.m() <= 6) confs.push_back(conf);
  }

  std::mt19937_64 rng(ctx.seed);
  for (size_t i = 0; i < confs.size(); ++i) {
    const Configuration& conf = confs[i];
    const std::string tag = cfg_tag(conf, i);
    const SimplicialComplex k = build_complex(conf);

    const auto& max_faces = k.maximal_faces();
    std::vector<std::uint32_t> probe{max_faces.front()};
    if (max_faces.size() > 1) probe.push_back(max_faces.back());
    int fi = 0;
    for (std::uint32_t face : probe) {
      Stratum stratum;
      stratum.kind = Stratum::Kind::kCubeFace;
      stratum.face = mask_to_indices(face);
      const std::vector<double> point =
          random_cube_stratum_point(rng, conf.m(), stratum.face);
      const JacobianCertificate cert = jacobian_rank(conf, k, stratum, point);
      std::ostringstream os;
      os << "rank " << cert.rank << " expected " << cert.expected_rank;
      ctx.add(tag + " cube stratum #" + std::to_string(fi++), cert.pass,
              os.str());
    }

    const auto interior = random_orthant_stratum_point(rng, conf);
    if (interior.has_value()) {
      Stratum orthant;
      orthant.kind = Stratum::Kind::kOrthant;
      const JacobianCertificate cert =
          jacobian_rank(conf, k, orthant, *interior);
      std::ostringstream os;
      os << "rank " << cert.rank << " expected " << cert.expected_rank;
      ctx.add(tag + " orthant stratum", cert.pass, os.str());
    } else {
      ctx.add(tag + " orthant stratum vacuous", true);
    }
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"admissibility", "combinatorics", "minimization",
          "projection",    "rigidity",      "jacobian"};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  SuiteReport report;
  report.suite = name;
  SuiteContext ctx{seed, &report.checks};
  if (name == "admissibility") {
    admissibility_suite(ctx);
  } else if (name == "combinatorics") {
    combinatorics_suite(ctx);
  } else if (name == "minimization") {
    minimization_suite(ctx);
  } else if (name == "projection") {
    projection_suite(ctx);
  } else if (name == "rigidity") {
    rigidity_suite(ctx);
  } else if (name == "jacobian") {
    jacobian_suite(ctx);
  } else {
    throw ParseError("unknown suite: " + name);
  }
  report.total = static_cast<int>(report.checks.size());
  for (const CheckResult& check : report.checks) {
    if (check.pass) ++report.passed;
  }
  report.all_pass = report.passed == report.total;
  return report;
}

}  // namespace siegel
