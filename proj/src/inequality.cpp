#include "lpmchol/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

#include "lpmchol/cholesky.hpp"
#include "lpmchol/geometry.hpp"

namespace lpmchol {

namespace {

constexpr std::string_view kNames[] = {"mogulskii_min", "mogulskii_max", "ottaviani_skorohod", "levy_ottaviani",
                                       "hoffmann_jorgensen"};

double combine(double d, bool differ, GroupKind group, double p) {
  if (group == GroupKind::star || !differ) return d;
  if (std::isinf(p)) return std::max(d, 1.0);
  return std::pow(std::pow(d, p) + 1.0, 1.0 / p);
}

void simulate_batch(const WalkSpec& walk, const EtaVector& z, const SignPattern& zpat, std::uint64_t seed, int batch,
                    std::size_t first, std::size_t last, WalkSample& out) {
  RngStream rng(seed, std::uint64_t(batch));
  const int n = int(walk.steps.size());
  std::vector<EtaVector> s(static_cast<std::size_t>(n));
  std::vector<SignPattern> pat(static_cast<std::size_t>(n));
  for (std::size_t path = first; path < last; ++path) {
    EtaVector sum = EtaVector::Zero(z.size());
    SignPattern running = SignPattern::ones(zpat.size());
    double* dx = &out.step_size[path * std::size_t(n)];
    for (int k = 0; k < n; ++k) {
      const FactorDraw d = sample_factor(rng, walk.steps[std::size_t(k)]);
      if (walk.group == GroupKind::star && !(d.pattern == zpat)) {
        throw Error(Errc::GroupMismatch, "step left the cone of the starting point");
      }
      const EtaVector e = eta(d.factor);
      sum += e;
      running = schur_product(running, d.pattern);
      s[std::size_t(k)] = sum;
      pat[std::size_t(k)] = walk.group == GroupKind::star ? zpat : running;
      dx[k] = combine(e.norm(), !d.pattern.all_positive(), walk.group, walk.p);
    }
    double* dz = &out.to_start[path * std::size_t(n)];
    double* ds = &out.to_end[path * std::size_t(n)];
    const EtaVector& sn = s.back();
    for (int k = 0; k < n; ++k) {
      const auto kk = std::size_t(k);
      dz[k] = combine((s[kk] - z).norm(), !(pat[kk] == zpat), walk.group, walk.p);
      ds[k] = combine((sn - s[kk]).norm(), !(pat[kk] == pat.back()), walk.group, walk.p);
    }
    out.batch_of[path] = batch;
  }
}

// Events are indicator functions of one path; the formula maps their
// probabilities to (lhs, rhs).
struct Plan {
  int events = 0;
  std::function<void(const double* dz, const double* ds, const double* dx, char* hit)> mark;
  std::function<std::pair<double, double>(const std::vector<double>& prob)> formula;
};

double factorial(int k) { return std::tgamma(double(k) + 1.0); }

Plan make_plan(Inequality which, const InequalityParams& q, int n) {
  Plan plan;
  switch (which) {
    case Inequality::mogulskii_min:
    case Inequality::mogulskii_max: {
      if (q.m < 1 || q.m > n) throw Error(Errc::SpecInvalid, "Mogul'skii requires 1 <= m <= n");
      if (q.a < 0.0 || q.b < 0.0) throw Error(Errc::SpecInvalid, "Mogul'skii requires a, b >= 0");
      const bool is_min = which == Inequality::mogulskii_min;
      const int m0 = q.m - 1;
      const int span = n - m0;
      // 0: left event, 1: right event, 2..: d(S_k, S_n) <= b for k = m..n
      plan.events = 2 + span;
      plan.mark = [=](const double* dz, const double* ds, const double*, char* hit) {
        if (is_min) {
          hit[0] = *std::min_element(dz + m0, dz + n) <= q.a;
          hit[1] = dz[n - 1] <= q.a + q.b;
        } else {
          hit[0] = *std::max_element(dz + m0, dz + n) >= q.a;
          hit[1] = dz[n - 1] >= q.a - q.b;
        }
        for (int k = 0; k < span; ++k) hit[2 + k] = ds[m0 + k] <= q.b;
      };
      plan.formula = [=](const std::vector<double>& p) {
        const double mn = *std::min_element(p.begin() + 2, p.end());
        return std::make_pair(p[0] * mn, p[1]);
      };
      break;
    }
    case Inequality::ottaviani_skorohod: {
      if (!(q.alpha > 0.0) || !(q.beta > 0.0)) throw Error(Errc::SpecInvalid, "Ottaviani-Skorohod requires alpha, beta > 0");
      plan.events = 2 + n;
      plan.mark = [=](const double* dz, const double* ds, const double*, char* hit) {
        hit[0] = *std::max_element(dz, dz + n) >= q.alpha + q.beta;
        hit[1] = dz[n - 1] >= q.alpha;
        for (int k = 0; k < n; ++k) hit[2 + k] = ds[k] <= q.beta;
      };
      plan.formula = [](const std::vector<double>& p) {
        return std::make_pair(p[0] * *std::min_element(p.begin() + 2, p.end()), p[1]);
      };
      break;
    }
    case Inequality::levy_ottaviani: {
      const auto& a = q.levy;
      const int l = int(a.size());
      if (l < 2) throw Error(Errc::SpecInvalid, "Levy-Ottaviani requires l >= 2 thresholds");
      if (std::any_of(a.begin(), a.end(), [](double x) { return x < 0.0; })) {
        throw Error(Errc::SpecInvalid, "Levy-Ottaviani thresholds must be nonnegative");
      }
      const double total = std::accumulate(a.begin(), a.end(), 0.0);
      const bool even = l % 2 == 0;
      // 0: U_n > sum a; then l blocks of n events d(z_1, S_k) > a_i; then n
      // events d(S_k, S_n) > a_1.
      plan.events = 1 + l * n + n;
      plan.mark = [=](const double* dz, const double* ds, const double*, char* hit) {
        hit[0] = *std::max_element(dz, dz + n) > total;
        for (int i = 0; i < l; ++i)
          for (int k = 0; k < n; ++k) hit[1 + i * n + k] = dz[k] > a[std::size_t(i)];
        for (int k = 0; k < n; ++k) hit[1 + l * n + k] = ds[k] > a[0];
      };
      plan.formula = [=](const std::vector<double>& p) {
        auto block_max = [&](int offset) { return *std::max_element(p.begin() + offset, p.begin() + offset + n); };
        double rhs = 0.0;
        for (int i = 1; i < l; ++i) rhs += block_max(1 + i * n);
        rhs += even ? block_max(1 + l * n) : block_max(1);
        return std::make_pair(p[0], rhs);
      };
      break;
    }
    case Inequality::hoffmann_jorgensen: {
      const auto& ni = q.hj_n;
      const auto& ti = q.hj_t;
      const int k = int(ni.size());
      if (k < 1 || ti.size() != ni.size()) {
        throw Error(Errc::SpecInvalid, "Hoffmann-Jorgensen needs matching nonempty n_i and t_i lists");
      }
      if (std::any_of(ni.begin(), ni.end(), [](int x) { return x < 1; })) {
        throw Error(Errc::NotApplicable, "Hoffmann-Jorgensen requires every n_i >= 1");
      }
      if (std::accumulate(ni.begin(), ni.end(), 0) > n + 1) {
        throw Error(Errc::NotApplicable, "Hoffmann-Jorgensen requires sum n_i <= n + 1");
      }
      if (q.hj_s < 0.0 || std::any_of(ti.begin(), ti.end(), [](double x) { return x < 0.0; })) {
        throw Error(Errc::SpecInvalid, "Hoffmann-Jorgensen thresholds must be nonnegative");
      }
      const int total_n = std::accumulate(ni.begin(), ni.end(), 0);
      double threshold = (2.0 * ni[0] - 1.0) * ti[0] + (total_n - 1.0) * q.hj_s;
      for (int i = 1; i < k; ++i) threshold += 2.0 * ni[std::size_t(i)] * ti[std::size_t(i)];
      // 0: U_n > threshold; 1: M_n > s; 2..: U_n <= t_i
      plan.events = 2 + k;
      plan.mark = [=](const double* dz, const double*, const double* dx, char* hit) {
        const double u = *std::max_element(dz, dz + n);
        hit[0] = u > threshold;
        hit[1] = *std::max_element(dx, dx + n) > q.hj_s;
        for (int i = 0; i < k; ++i) hit[2 + i] = u <= ti[std::size_t(i)];
      };
      plan.formula = [=](const std::vector<double>& p) {
        double rhs = 1.0;
        bool first_in = false;
        for (int i = 0; i < k; ++i) {
          const double below = p[std::size_t(2 + i)];
          const int e = ni[std::size_t(i)] - (i == 0 ? 1 : 0);
          const double fact = factorial(ni[std::size_t(i)]);
          const bool in_i0 = std::pow(below, e) <= 1.0 / fact;
          if (i == 0) first_in = in_i0;
          if (in_i0) {
            rhs *= std::pow(1.0 - below, ni[std::size_t(i)]);
          } else {
            rhs *= std::pow((1.0 - below) / below, ni[std::size_t(i)]) / fact;
          }
        }
        if (!first_in) rhs *= p[2];
        return std::make_pair(p[0], p[1] + rhs);
      };
      break;
    }
  }
  return plan;
}

double batch_se(const std::vector<double>& v) {
  const double b = double(v.size());
  if (v.size() < 2) return 0.0;
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / b;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / (b - 1.0) / b);
}

}  // namespace

std::string_view to_string(Inequality which) { return kNames[int(which)]; }

Inequality parse_inequality(std::string_view name) {
  for (int i = 0; i < 5; ++i)
    if (kNames[i] == name) return Inequality(i);
  throw Error(Errc::ParseError, "unknown inequality '" + std::string(name) + "'");
}

void validate(const WalkSpec& walk) {
  if (walk.steps.empty()) throw Error(Errc::SpecInvalid, "walk has no steps");
  if (walk.group == GroupKind::box && !(walk.p >= 1.0)) throw Error(Errc::SpecInvalid, "d_p requires p >= 1");
  const Eigen::Index n = walk.start.dim();
  for (const auto& step : walk.steps) {
    validate(step);
    if (spec_dim(step) != n) throw Error(Errc::DimensionMismatch, "step dimension differs from the start point");
    const Support s = support(step);
    if (s.cone != walk.start.cone) throw Error(Errc::GroupMismatch, "steps and start lie in different cone kinds");
    if (walk.group == GroupKind::star && !(s.pattern && *s.pattern == walk.start.pattern)) {
      throw Error(Errc::GroupMismatch, "per-cone walk needs every step in the cone of the start point");
    }
  }
}

WalkSample simulate_walk(const WalkSpec& walk, std::size_t paths, std::uint64_t seed, int batches, int threads) {
  validate(walk);
  if (paths == 0) throw Error(Errc::SpecInvalid, "need at least one path");
  batches = std::max(1, std::min(batches, int(paths)));
  const int n = int(walk.steps.size());
  WalkSample out;
  out.steps = n;
  out.batches = batches;
  out.batch_of.assign(paths, 0);
  out.to_start.assign(paths * std::size_t(n), 0.0);
  out.to_end.assign(paths * std::size_t(n), 0.0);
  out.step_size.assign(paths * std::size_t(n), 0.0);

  const EtaVector z = eta(canonical_factor(walk.start));
  const SignPattern zpat = walk.start.pattern;
  auto run = [&](int b) {
    const std::size_t first = paths * std::size_t(b) / std::size_t(batches);
    const std::size_t last = paths * std::size_t(b + 1) / std::size_t(batches);
    simulate_batch(walk, z, zpat, seed, b, first, last, out);
  };
  threads = std::max(1, std::min(threads, batches));
  if (threads == 1) {
    for (int b = 0; b < batches; ++b) run(b);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int b = t; b < batches; b += threads) run(b);
        } catch (...) {
          errors[std::size_t(t)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return out;
}

Report evaluate_inequality(const WalkSample& sample, Inequality which, const InequalityParams& params) {
  const int n = sample.steps;
  const Plan plan = make_plan(which, params, n);
  const auto events = std::size_t(plan.events);
  std::vector<double> total(events, 0.0);
  std::vector<std::vector<double>> per_batch(std::size_t(sample.batches), std::vector<double>(events, 0.0));
  std::vector<double> batch_size(std::size_t(sample.batches), 0.0);
  std::vector<char> hit(events);
  for (std::size_t path = 0; path < sample.paths(); ++path) {
    const std::size_t off = path * std::size_t(n);
    plan.mark(&sample.to_start[off], &sample.to_end[off], &sample.step_size[off], hit.data());
    auto& b = per_batch[std::size_t(sample.batch_of[path])];
    batch_size[std::size_t(sample.batch_of[path])] += 1.0;
    for (std::size_t e = 0; e < events; ++e) {
      total[e] += hit[e];
      b[e] += hit[e];
    }
  }
  for (auto& t : total) t /= double(sample.paths());

  Report r;
  r.which = which;
  r.paths = sample.paths();
  std::tie(r.lhs, r.rhs) = plan.formula(total);
  std::vector<double> lhs, rhs, diff;
  for (std::size_t b = 0; b < per_batch.size(); ++b) {
    if (batch_size[b] == 0.0) continue;
    for (auto& x : per_batch[b]) x /= batch_size[b];
    const auto [l, h] = plan.formula(per_batch[b]);
    lhs.push_back(l);
    rhs.push_back(h);
    diff.push_back(l - h);
  }
  r.se_lhs = batch_se(lhs);
  r.se_rhs = batch_se(rhs);
  r.se_diff = batch_se(diff);
  r.pass = r.lhs - r.rhs <= 3.0 * r.se_diff + 1e-12;
  return r;
}

Report verify_inequality(const WalkSpec& walk, Inequality which, const InequalityParams& params, std::size_t paths,
                         std::uint64_t seed) {
  make_plan(which, params, int(walk.steps.size()));
  return evaluate_inequality(simulate_walk(walk, paths, seed), which, params);
}

}  // namespace lpmchol
