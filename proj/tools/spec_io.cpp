#include "spec_io.hpp"

#include "lpmchol/biggroup.hpp"
#include "lpmchol/cholesky.hpp"
#include "lpmchol/core.hpp"
#include "matrix_io.hpp"

namespace lpmch {

using namespace lpmchol;
using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad \"") + key + "\": " + e.what());
  }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? get<T>(j, key) : fallback;
}

ConeKind cone_of(const json& j) { return parse_cone(get_or<std::string>(j, "cone", "lpm")); }

RealConePoint point_from(const json& j, const char* key, ConeKind cone, const std::optional<SignPattern>& eps) {
  if (!j.contains(key)) {
    if (!eps) throw Error(Errc::ParseError, std::string("need \"") + key + "\" or \"epsilon\"");
    return canonical_point(*eps, cone);
  }
  const RealConePoint p = classify(RealSymmetric(matrix_from_json(j.at(key))), cone);
  if (eps && !(p.pattern == *eps)) {
    throw Error(Errc::PatternMismatch, std::string("\"") + key + "\" has pattern " + p.pattern.to_string() +
                                           ", expected " + eps->to_string());
  }
  return p;
}

std::optional<SignPattern> pattern_of(const json& j) {
  if (!j.contains("epsilon")) return std::nullopt;
  return SignPattern::parse(get<std::string>(j, "epsilon"));
}

WishartSpec wishart_from(const json& j) {
  WishartSpec s;
  s.sigma = RealSymmetric(matrix_from_json(field(j, "sigma")));
  s.dof = get<int>(j, "dof");
  s.cone = cone_of(j);
  const auto eps = pattern_of(j);
  s.pattern = eps ? *eps : SignPattern::ones(std::size_t(s.sigma.dim()));
  return s;
}

std::string point_json(const RealConePoint& p) {
  return "{\"matrix\":" + matrix_json(p.matrix.matrix()) + ",\"cone\":\"" + to_string(p.cone) + "\",\"epsilon\":\"" +
         p.pattern.to_string() + "\"}";
}

std::string wishart_fields(const WishartSpec& s) {
  return "\"sigma\":" + matrix_json(s.sigma.matrix()) + ",\"dof\":" + std::to_string(s.dof) + ",\"epsilon\":\"" +
         s.pattern.to_string() + "\",\"cone\":\"" + to_string(s.cone) + "\"";
}

}  // namespace

ConeKind parse_cone(const std::string& text) {
  if (text == "lpm" || text == "LPM") return ConeKind::LPM;
  if (text == "tpm" || text == "TPM") return ConeKind::TPM;
  throw Error(Errc::ParseError, "cone must be lpm or tpm, got '" + text + "'");
}

DistributionSpec spec_from_json(const json& j) {
  const std::string dist = get<std::string>(j, "dist");
  DistributionSpec spec;
  if (dist == "wishart") {
    spec = wishart_from(j);
  } else if (dist == "inv-wishart") {
    spec = InverseWishartSpec{wishart_from(j)};
  } else if (dist == "cholesky-normal") {
    CholeskyNormalSpec s;
    s.center = point_from(j, "center", cone_of(j), pattern_of(j));
    const Eigen::Index m = s.center.dim() * (s.center.dim() + 1) / 2;
    if (j.contains("cov")) {
      s.cov = matrix_from_json(j.at("cov"));
    } else {
      s.cov = get_or<double>(j, "cov_scale", 0.1) * Eigen::MatrixXd::Identity(m, m);
    }
    spec = s;
  } else if (dist == "clone") {
    std::optional<int> k;
    if (j.contains("k") && !j.at("k").is_null()) k = get<int>(j, "k");
    spec = make_clone(spec_from_json(field(j, "base")), k, cone_of(j));
  } else if (dist == "point") {
    spec = PointMassSpec{point_from(j, "matrix", cone_of(j), pattern_of(j))};
  } else {
    throw Error(Errc::ParseError, "unknown distribution '" + dist + "'");
  }
  validate(spec);
  return spec;
}

std::string spec_json(const DistributionSpec& spec) {
  return std::visit(
      overloaded{
          [](const WishartSpec& s) { return "{\"dist\":\"wishart\"," + wishart_fields(s) + "}"; },
          [](const InverseWishartSpec& s) { return "{\"dist\":\"inv-wishart\"," + wishart_fields(s.base) + "}"; },
          [](const CholeskyNormalSpec& s) {
            return "{\"dist\":\"cholesky-normal\",\"center\":" + matrix_json(s.center.matrix.matrix()) +
                   ",\"epsilon\":\"" + s.center.pattern.to_string() + "\",\"cone\":\"" + to_string(s.center.cone) +
                   "\",\"cov\":" + matrix_json(s.cov) + "}";
          },
          [](const std::shared_ptr<const InertialCloneSpec>& s) {
            std::string out = "{\"dist\":\"clone\",\"base\":" + spec_json(s->base);
            if (s->k) out += ",\"k\":" + std::to_string(*s->k);
            return out + ",\"cone\":\"" + to_string(s->cone) + "\"}";
          },
          [](const PointMassSpec& s) {
            return "{\"dist\":\"point\",\"matrix\":" + matrix_json(s.point.matrix.matrix()) + ",\"epsilon\":\"" +
                   s.point.pattern.to_string() + "\",\"cone\":\"" + to_string(s.point.cone) + "\"}";
          },
      },
      spec);
}

WalkConfig walk_config_from_json(const json& j) {
  WalkConfig cfg;
  const std::string group = get_or<std::string>(j, "group", "star");
  if (group == "star") {
    cfg.walk.group = GroupKind::star;
  } else if (group == "box") {
    cfg.walk.group = GroupKind::box;
  } else {
    throw Error(Errc::ParseError, "group must be star or box, got '" + group + "'");
  }
  cfg.walk.p = j.contains("p") && j.at("p").is_string() && j.at("p") == "inf" ? kInfinity
                                                                                 : get_or<double>(j, "p", 2.0);
  const json& steps = field(j, "steps");
  if (steps.is_array()) {
    for (const auto& s : steps) cfg.walk.steps.push_back(spec_from_json(s));
  } else {
    const int count = get<int>(j, "steps");
    if (count < 1) throw Error(Errc::SpecInvalid, "\"steps\" must be positive");
    const DistributionSpec step = spec_from_json(field(j, "step"));
    cfg.walk.steps.assign(std::size_t(count), step);
  }
  const DistributionSpec& first = cfg.walk.steps.front();
  const Eigen::Index n = spec_dim(first);
  const Support sup = support(first);
  if (j.contains("start")) {
    const json& s = j.at("start");
    cfg.walk.start = point_from(s, "matrix", cone_of(s), pattern_of(s));
  } else if (cfg.walk.group == GroupKind::star && sup.pattern) {
    cfg.walk.start = canonical_point(*sup.pattern, sup.cone);
  } else {
    cfg.walk.start = canonical_point(SignPattern::ones(std::size_t(n)), sup.cone);
  }
  cfg.paths = get_or<std::size_t>(j, "paths", cfg.paths);
  cfg.seed = get_or<std::uint64_t>(j, "seed", cfg.seed);
  if (j.contains("params")) {
    const json& p = j.at("params");
    InequalityParams& q = cfg.params;
    q.a = get_or(p, "a", q.a);
    q.b = get_or(p, "b", q.b);
    q.m = get_or(p, "m", q.m);
    q.alpha = get_or(p, "alpha", q.alpha);
    q.beta = get_or(p, "beta", q.beta);
    q.levy = get_or(p, "levy", q.levy);
    q.hj_n = get_or(p, "hj_n", q.hj_n);
    q.hj_t = get_or(p, "hj_t", q.hj_t);
    q.hj_s = get_or(p, "hj_s", q.hj_s);
  }
  validate(cfg.walk);
  return cfg;
}

WalkConfig read_walk_config(const std::string& path) { return walk_config_from_json(read_json(path)); }

}  // namespace lpmch
