// Batch front end for the lpmchol library. Matrices are read from .json or
// .csv files; results go to stdout as one JSON object per line.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpmchol/lpmchol.hpp"
#include "matrix_io.hpp"
#include "spec_io.hpp"

using namespace lpmchol;
using lpmch::format_double;
using lpmch::matrix_json;

namespace {

struct Common {
  std::string cone = "lpm";
  double tol = kDefaultTol;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--cone", c.cone, "Cone kind")->check(CLI::IsMember({"lpm", "tpm"}));
  cmd->add_option("--tol", c.tol, "Relative tolerance for minors")->check(CLI::NonNegativeNumber);
}

RealConePoint load_point(const std::string& path, const Common& c) {
  return classify(RealSymmetric(lpmch::read_matrix(path)), lpmch::parse_cone(c.cone), c.tol);
}

void emit_matrix(const Eigen::MatrixXd& m, const std::string& out) {
  if (out.empty()) {
    std::cout << matrix_json(m) << '\n';
  } else {
    lpmch::write_matrix(out, m);
  }
}

std::string point_line(const RealConePoint& p) {
  std::string s = matrix_json(p.matrix.matrix());
  s.pop_back();
  return s + ",\"cone\":\"" + to_string(p.cone) + "\",\"epsilon\":\"" + p.pattern.to_string() + "\"}";
}

std::uint64_t effective_seed(std::uint64_t seed) {
  if (const char* env = std::getenv("LPMCH_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw Error(Errc::ParseError, "LPMCH_SEED must be an unsigned integer");
    return v;
  }
  return seed;
}

struct SampleOptions {
  std::string dist = "wishart";
  std::string sigma;
  int dof = 0;
  std::string epsilon;
  std::string center;
  std::string cov;
  double cov_scale = 0.1;
  int k = -1;
  std::string base = "wishart";
};

void add_spec_options(CLI::App* cmd, SampleOptions& o) {
  cmd->add_option("--dist", o.dist, "Distribution")
      ->check(CLI::IsMember({"wishart", "inv-wishart", "cholesky-normal", "clone"}));
  cmd->add_option("--sigma", o.sigma, "Wishart scale matrix file");
  cmd->add_option("--dof", o.dof, "Wishart degrees of freedom");
  cmd->add_option("--epsilon", o.epsilon, "Sign pattern such as +-");
  cmd->add_option("--center", o.center, "Cholesky-normal center matrix file");
  cmd->add_option("--cov", o.cov, "Cholesky-normal covariance file (n(n+1)/2 square)");
  cmd->add_option("--cov-scale", o.cov_scale, "Cholesky-normal covariance multiple of the identity");
  cmd->add_option("--k", o.k, "Negative inertia for clone (default: all patterns)");
  cmd->add_option("--base", o.base, "Positive definite base of clone")->check(CLI::IsMember({"wishart", "cholesky-normal"}));
}

// Builds the JSON accepted by spec_from_json from flat options.
nlohmann::json spec_options_json(const SampleOptions& o, const std::string& dist, const std::string& cone) {
  nlohmann::json j;
  j["dist"] = dist;
  j["cone"] = cone;
  if (dist == "clone") {
    SampleOptions base = o;
    base.epsilon.clear();
    j["base"] = spec_options_json(base, o.base, cone);
    if (o.k >= 0) j["k"] = o.k;
    return j;
  }
  if (!o.epsilon.empty()) j["epsilon"] = o.epsilon;
  if (dist == "cholesky-normal") {
    if (!o.center.empty()) {
      j["center"] = nlohmann::json::parse(matrix_json(lpmch::read_matrix(o.center)));
    } else if (o.epsilon.empty() && !o.sigma.empty()) {
      j["center"] = nlohmann::json::parse(matrix_json(lpmch::read_matrix(o.sigma)));
    }
    if (!o.cov.empty()) {
      j["cov"] = nlohmann::json::parse(matrix_json(lpmch::read_matrix(o.cov)));
    } else {
      j["cov_scale"] = o.cov_scale;
    }
    return j;
  }
  if (o.sigma.empty()) throw Error(Errc::SpecInvalid, "--sigma is required for " + dist);
  j["sigma"] = nlohmann::json::parse(matrix_json(lpmch::read_matrix(o.sigma)));
  j["dof"] = o.dof;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Generalized Cholesky factorization on signed minor cones"};
  app.require_subcommand(1);

  Common common;
  std::string out;

  auto* classify_cmd = app.add_subcommand("classify", "Sign pattern, inertia and minors of a matrix");
  std::string classify_file;
  classify_cmd->add_option("file", classify_file)->required();
  add_common(classify_cmd, common);

  auto* factor_cmd = app.add_subcommand("factor", "Factor A = L B L^* (LPM) or A = L^* B L (TPM)");
  std::string factor_file, basis = "diag", epsilon;
  factor_cmd->add_option("file", factor_file)->required();
  factor_cmd->add_option("--basis", basis, "'diag' or a basis matrix file");
  factor_cmd->add_option("--epsilon", epsilon, "Expected sign pattern");
  factor_cmd->add_option("-o,--out", out, "Output file (.json or .csv)");
  add_common(factor_cmd, common);

  auto* compose_cmd = app.add_subcommand("compose", "Form L B L^* (LPM) or L^* B L (TPM) from a factor");
  std::string compose_file;
  compose_cmd->add_option("file", compose_file)->required();
  compose_cmd->add_option("--basis", basis, "'diag' or a basis matrix file");
  compose_cmd->add_option("--epsilon", epsilon, "Sign pattern of the diagonal basis");
  compose_cmd->add_option("-o,--out", out, "Output file (.json or .csv)");
  add_common(compose_cmd, common);

  auto* distance_cmd = app.add_subcommand("distance", "Log-Cholesky distance");
  std::vector<std::string> pair;
  double p = 2.0;
  std::string group = "star";
  distance_cmd->add_option("files", pair)->required()->expected(2);
  distance_cmd->add_option("--p", p, "Exponent of d_p (use inf for the maximum)");
  distance_cmd->add_option("--group", group)->check(CLI::IsMember({"star", "box"}));
  add_common(distance_cmd, common);

  auto* geodesic_cmd = app.add_subcommand("geodesic", "Point at time t on the geodesic from A to B");
  double t = 0.5;
  geodesic_cmd->add_option("files", pair)->required()->expected(2);
  geodesic_cmd->add_option("--t", t)->required();
  geodesic_cmd->add_option("-o,--out", out, "Output file (.json or .csv)");
  add_common(geodesic_cmd, common);

  auto* mean_cmd = app.add_subcommand("mean", "Log-Cholesky mean of matrices in one cone");
  std::vector<std::string> mean_files;
  mean_cmd->add_option("files", mean_files)->required();
  mean_cmd->add_option("-o,--out", out, "Output file (.json or .csv)");
  add_common(mean_cmd, common);

  auto* sample_cmd = app.add_subcommand("sample", "Draw matrices; prints a header line then one matrix per line");
  SampleOptions so;
  int count = 1;
  std::uint64_t seed = 0;
  add_spec_options(sample_cmd, so);
  sample_cmd->add_option("--count", count)->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--seed", seed);
  sample_cmd->add_option("--cone", common.cone)->check(CLI::IsMember({"lpm", "tpm"}));

  auto* density_cmd = app.add_subcommand("density", "Log-density of a matrix");
  std::string density_file;
  bool matrix_measure = false;
  density_cmd->add_option("file", density_file)->required();
  add_spec_options(density_cmd, so);
  density_cmd->add_flag("--matrix-measure", matrix_measure,
                        "Cholesky-normal density against Lebesgue measure on symmetric matrices");
  add_common(density_cmd, common);

  auto* resign_cmd = app.add_subcommand("resign", "Replace D_e by D_d in A = L D_e L^T");
  std::string resign_file, target;
  resign_cmd->add_option("file", resign_file)->required();
  resign_cmd->add_option("--to", target)->required();
  resign_cmd->add_option("-o,--out", out, "Output file (.json or .csv)");
  resign_cmd->add_option("--tol", common.tol)->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Monte Carlo check of a stochastic inequality");
  std::string which, config;
  std::size_t trials = 0;
  verify_cmd->add_option("--inequality", which)
      ->required()
      ->check(CLI::IsMember({"mogulskii_min", "mogulskii_max", "ottaviani_skorohod", "levy_ottaviani",
                             "hoffmann_jorgensen"}));
  verify_cmd->add_option("--trials", trials, "Number of paths (overrides the config)");
  auto* seed_opt = verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--config", config)->required();

  auto* ssrpm_cmd = app.add_subcommand("ssrpm-check", "Pattern shared by all principal minors, if any");
  std::string ssrpm_file;
  ssrpm_cmd->add_option("file", ssrpm_file)->required();
  ssrpm_cmd->add_option("--tol", common.tol)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const ConeKind cone = lpmch::parse_cone(common.cone);

  auto basis_point = [&](const SignPattern& eps) {
    if (basis == "diag") return canonical_point(eps, cone);
    RealConePoint b = classify(RealSymmetric(lpmch::read_matrix(basis)), cone, common.tol);
    if (!(b.pattern == eps)) {
      throw Error(Errc::PatternMismatch, "basis pattern " + b.pattern.to_string() + " differs from " + eps.to_string());
    }
    return b;
  };

  if (*classify_cmd) {
    const RealSymmetric a(lpmch::read_matrix(classify_file));
    const RealConePoint pt = classify(a, cone, common.tol);
    const Eigen::VectorXd minors = cone_minors(a, cone);
    std::string line = "{\"cone\":\"" + common.cone + "\",\"pattern\":\"" + pt.pattern.to_string() +
                       "\",\"inertia\":" + std::to_string(negative_inertia(pt.pattern)) + ",\"minors\":[";
    for (Eigen::Index k = 0; k < minors.size(); ++k) line += (k ? "," : "") + format_double(minors(k));
    std::cout << line << "]}\n";
  } else if (*factor_cmd) {
    const RealConePoint a = load_point(factor_file, common);
    if (!epsilon.empty() && !(a.pattern == SignPattern::parse(epsilon))) {
      throw Error(Errc::PatternMismatch, "matrix has pattern " + a.pattern.to_string() + ", expected " + epsilon);
    }
    const RealConePoint b = basis_point(a.pattern);
    const RealLower l = cone == ConeKind::LPM ? factor(a, b, common.tol) : factor_tpm(a, b, common.tol);
    emit_matrix(l.matrix(), out);
  } else if (*compose_cmd) {
    const RealLower l(lpmch::read_matrix(compose_file));
    SignPattern eps = epsilon.empty() ? SignPattern::ones(std::size_t(l.dim())) : SignPattern::parse(epsilon);
    if (basis != "diag") eps = classify(RealSymmetric(lpmch::read_matrix(basis)), cone, common.tol).pattern;
    const RealConePoint b = basis_point(eps);
    const RealConePoint a = cone == ConeKind::LPM ? compose(l, b) : compose_tpm(l, b);
    emit_matrix(a.matrix.matrix(), out);
  } else if (*distance_cmd) {
    const RealConePoint a = load_point(pair[0], common);
    const RealConePoint b = load_point(pair[1], common);
    const double d = group == "star" ? lpm_distance(a, b)
                                     : dp_distance(BigGroupElement(a, common.tol), BigGroupElement(b, common.tol), p);
    std::cout << format_double(d) << '\n';
  } else if (*geodesic_cmd) {
    const RealConePoint a = load_point(pair[0], common);
    const RealConePoint b = load_point(pair[1], common);
    emit_matrix(lpm_geodesic(a, b, t).matrix.matrix(), out);
  } else if (*mean_cmd) {
    std::vector<RealConePoint> pts;
    for (const auto& f : mean_files) pts.push_back(load_point(f, common));
    emit_matrix(log_cholesky_mean(pts).matrix.matrix(), out);
  } else if (*sample_cmd) {
    const std::uint64_t s = effective_seed(seed);
    const DistributionSpec spec = lpmch::spec_from_json(spec_options_json(so, so.dist, common.cone));
    RngStream rng(s);
    std::string text = "{\"spec\":" + lpmch::spec_json(spec) + ",\"seed\":" + std::to_string(s) +
                       ",\"count\":" + std::to_string(count) + "}\n";
    for (int i = 0; i < count; ++i) text += point_line(sample(rng, spec)) + "\n";
    std::cout << text;
  } else if (*density_cmd) {
    const DistributionSpec spec = lpmch::spec_from_json(spec_options_json(so, so.dist, common.cone));
    const Support sup = support(spec);
    const RealConePoint m = classify(RealSymmetric(lpmch::read_matrix(density_file)), sup.cone, common.tol);
    std::cout << format_double(log_density(m, spec, matrix_measure)) << '\n';
  } else if (*resign_cmd) {
    const RealConePoint a = classify(RealSymmetric(lpmch::read_matrix(resign_file)), ConeKind::LPM, common.tol);
    emit_matrix(resign(a, SignPattern::parse(target), common.tol).matrix.matrix(), out);
  } else if (*verify_cmd) {
    lpmch::WalkConfig cfg = lpmch::read_walk_config(config);
    if (trials > 0) cfg.paths = trials;
    const std::uint64_t s = effective_seed(seed_opt->count() ? seed : cfg.seed);
    const Report r = verify_inequality(cfg.walk, parse_inequality(which), cfg.params, cfg.paths, s);
    std::cout << "{\"inequality\":\"" << to_string(r.which) << "\",\"paths\":" << r.paths << ",\"seed\":" << s
              << ",\"lhs\":" << format_double(r.lhs) << ",\"rhs\":" << format_double(r.rhs)
              << ",\"se_lhs\":" << format_double(r.se_lhs) << ",\"se_rhs\":" << format_double(r.se_rhs)
              << ",\"se_diff\":" << format_double(r.se_diff) << ",\"pass\":" << (r.pass ? "true" : "false") << "}\n";
  } else if (*ssrpm_cmd) {
    const auto eps = is_ssrpm(RealSymmetric(lpmch::read_matrix(ssrpm_file)), common.tol);
    std::cout << (eps ? eps->to_string() : std::string("not SSRPM")) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << '\n';
    return 1;
  }
}
