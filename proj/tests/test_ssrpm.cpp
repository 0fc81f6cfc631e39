#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lpmchol/cholesky.hpp"
#include "lpmchol/ssrpm.hpp"
#include "support/oracles.hpp"

using namespace lpmchol;

namespace {

// All principal minors of size k by cofactor expansion.
std::vector<double> principal_minors(const Eigen::MatrixXd& a, int k) {
  std::vector<double> out;
  const int n = int(a.rows());
  for (unsigned s = 1; s < (1u << n); ++s) {
    if (std::popcount(s) != k) continue;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (s & (1u << i)) idx.push_back(i);
    Eigen::MatrixXd sub(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub(r, c) = a(idx[std::size_t(r)], idx[std::size_t(c)]);
    out.push_back(oracle::cofactor_det<double>(sub));
  }
  return out;
}

}  // namespace

TEST_CASE("membership examples") {
  CHECK(is_ssrpm(RealSymmetric(Eigen::MatrixXd::Identity(4, 4))) == SignPattern::ones(4));
  CHECK(!is_ssrpm(canonical_diagonal(SignPattern{1, -1})).has_value());
  CHECK(is_ssrpm(toeplitz_example(1, -0.6, 3).matrix) == SignPattern{1, 1, -1});
  CHECK_THROWS_AS(is_ssrpm(RealSymmetric(Eigen::MatrixXd::Identity(15, 15))), Error);
  CHECK_THROWS_AS(is_ssrpm(RealSymmetric(Eigen::MatrixXd::Identity(5, 5)), kDefaultTol, 4), Error);
}

TEST_CASE("toeplitz family") {
  CHECK(toeplitz_example(3, -1, 3).pattern == SignPattern{1, 1, 1});
  CHECK(toeplitz_example(1, 2, 2).pattern == SignPattern{1, -1});
  CHECK(toeplitz_example(-1, -2, 2).pattern == SignPattern{-1, -1});
  CHECK_THROWS_AS(toeplitz_example(2, 2, 3), Error);
  CHECK_THROWS_AS(toeplitz_example(2, -1, 3), Error);  // a + 2b = 0

  for (int n = 1; n <= 6; ++n) {
    for (double a : {-3.0, -1.0, 0.5, 2.0, 4.0}) {
      for (double b : {-2.5, -0.6, 0.3, 1.5}) {
        bool degenerate = a == b;
        for (int k = 1; k <= n; ++k) degenerate = degenerate || a + (k - 1) * b == 0.0;
        if (degenerate) continue;
        const ExampleMatrix ex = toeplitz_example(a, b, n);
        for (int k = 1; k <= n; ++k) {
          const double closed = toeplitz_principal_minor(a, b, k);
          for (double m : principal_minors(ex.matrix.matrix(), k)) {
            CHECK(m == doctest::Approx(closed).epsilon(1e-9));
          }
        }
        CHECK(is_ssrpm(ex.matrix) == ex.pattern);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ex.matrix.matrix());
        std::vector<double> expect(std::size_t(n - 1), a - b);
        expect.push_back(a + (n - 1) * b);
        std::sort(expect.begin(), expect.end());
        for (int i = 0; i < n; ++i) CHECK(std::abs(es.eigenvalues()(i) - expect[std::size_t(i)]) < 1e-10);
      }
    }
  }
}

TEST_CASE("almost N example") {
  const RealSymmetric m = almost_n_example(-1, -2, -3, 3);
  const Eigen::MatrixXd a = m.matrix();
  for (double x : principal_minors(a, 1)) CHECK(x < 0.0);
  const auto two = principal_minors(a, 2);
  for (double x : two) CHECK(x < 0.0);
  CHECK(std::count(two.begin(), two.end(), -3.0) == 1);
  CHECK(std::count(two.begin(), two.end(), -1.0) == 2);
  CHECK(oracle::cofactor_det<double>(a) == 1.0);
  CHECK(almost_n_minor(-1, -2, -3, 3) == 1.0);
  CHECK(is_ssrpm(m) == SignPattern{-1, -1, 1});

  for (double c : {-4.5, -4.0, -8.0 / 3.0, -2.0}) {
    try {
      almost_n_example(-1, -2, c, 3);
      FAIL("expected ConstraintViolation");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ConstraintViolation);
    }
  }
  CHECK_THROWS_AS(almost_n_example(-1, -2, -3, 2), Error);
  CHECK_THROWS_AS(almost_n_example(1, -2, -3, 3), Error);

  // Larger members of the family and their negations.
  for (int n = 3; n <= 7; ++n) {
    const double aa = -1.0, bb = -2.0;
    const double lo = (n - 2) * bb * bb / (aa + (n - 3) * bb);
    const double hi = (n - 1) * bb * bb / (aa + (n - 2) * bb);
    const double c = 0.5 * (lo + hi);
    const RealSymmetric x = almost_n_example(aa, bb, c, n);
    std::vector<int> almost(static_cast<std::size_t>(n), -1);
    almost.back() = 1;
    CHECK(is_ssrpm(x) == SignPattern(almost));
    for (int k = 1; k < n; ++k) {
      CHECK(oracle::leading_minor(x.matrix(), k) == doctest::Approx(toeplitz_principal_minor(aa, bb, k)).epsilon(1e-9));
    }
    CHECK(oracle::cofactor_det<double>(x.matrix()) == doctest::Approx(almost_n_minor(aa, bb, c, n)).epsilon(1e-9));
    // The closed form holds for every size of the bordered matrix.
    for (int k = 3; k <= n; ++k) {
      const double ck = 0.5 * ((k - 2) * bb * bb / (aa + (k - 3) * bb) + (k - 1) * bb * bb / (aa + (k - 2) * bb));
      CHECK(oracle::cofactor_det<double>(almost_n_example(aa, bb, ck, k).matrix()) ==
            doctest::Approx(almost_n_minor(aa, bb, ck, k)).epsilon(1e-9));
    }
    std::vector<int> neg(static_cast<std::size_t>(n));
    for (int k = 1; k < n; ++k) neg[std::size_t(k - 1)] = k % 2 ? 1 : -1;
    neg.back() = n % 2 ? -1 : 1;
    CHECK(is_ssrpm(RealSymmetric(Eigen::MatrixXd(-x.matrix()))) == SignPattern(neg));
  }
}

TEST_CASE("SSRPM is contained in LPM") {
  std::mt19937_64 g(1);
  for (int rep = 0; rep < 200; ++rep) {
    const Eigen::Index n = 1 + rep % 5;
    const RealSymmetric a(oracle::random_symmetric(g, n));
    if (const auto eps = is_ssrpm(a)) CHECK(classify(a).pattern == *eps);
  }
}

TEST_CASE("only definite cones are entirely SSRPM") {
  std::mt19937_64 g(2);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<int> alt(n);
    for (std::size_t k = 0; k < n; ++k) alt[k] = k % 2 ? 1 : -1;
    for (const auto& eps : all_patterns(n)) {
      int hits = 0;
      for (int rep = 0; rep < 200; ++rep) {
        const RealConePoint a = canonical_compose(RealLower(oracle::random_lower(g, Eigen::Index(n))), eps);
        hits += is_ssrpm(a.matrix, 1e-12).has_value();
      }
      const bool definite = eps.all_positive() || eps == SignPattern(alt);
      if (definite) {
        CHECK(hits == 200);
      } else {
        CHECK(hits < 200);
      }
    }
  }
}
