#include "lpmchol/sign_pattern.hpp"

#include <algorithm>
#include <utility>

#include "lpmchol/error.hpp"

namespace lpmchol {

namespace {

void validate(const std::vector<int>& signs) {
  if (signs.empty()) {
    throw Error(Errc::SpecInvalid, "sign pattern must be nonempty");
  }
  for (int s : signs) {
    if (s != 1 && s != -1) {
      throw Error(Errc::SpecInvalid, "sign pattern entries must be +1 or -1");
    }
  }
}

}  // namespace

SignPattern::SignPattern(std::initializer_list<int> signs) : signs_(signs) { validate(signs_); }

SignPattern::SignPattern(std::vector<int> signs) : signs_(std::move(signs)) { validate(signs_); }

SignPattern SignPattern::ones(std::size_t n) { return SignPattern(std::vector<int>(n, 1)); }

SignPattern SignPattern::parse(std::string_view text) {
  std::vector<int> signs;
  signs.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      signs.push_back(1);
    } else if (c == '-') {
      signs.push_back(-1);
    } else {
      throw Error(Errc::ParseError, "sign pattern may contain only '+' and '-': " + std::string(text));
    }
  }
  if (signs.empty()) throw Error(Errc::ParseError, "empty sign pattern");
  return SignPattern(std::move(signs));
}

SignPattern SignPattern::from_bits(std::size_t n, std::uint64_t bits) {
  std::vector<int> signs(n);
  for (std::size_t k = 0; k < n; ++k) signs[k] = ((bits >> k) & 1U) ? -1 : 1;
  return SignPattern(std::move(signs));
}

bool SignPattern::all_positive() const {
  return std::all_of(signs_.begin(), signs_.end(), [](int s) { return s == 1; });
}

std::string SignPattern::to_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (int s : signs_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

SignPattern reverse_pattern(const SignPattern& eps) {
  const std::size_t n = eps.size();
  if (n == 1) return eps;
  std::vector<int> out(n);
  const int last = eps[n - 1];
  for (std::size_t k = 0; k + 1 < n; ++k) out[k] = last * eps[n - 2 - k];
  out[n - 1] = last;
  return SignPattern(std::move(out));
}

SignPattern schur_product(const SignPattern& a, const SignPattern& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch, "Schur product of patterns of different lengths");
  }
  std::vector<int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * b[k];
  return SignPattern(std::move(out));
}

int negative_inertia(const SignPattern& eps) {
  int changes = 0;
  int prev = 1;
  for (int s : eps.signs()) {
    if (s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::vector<SignPattern> all_patterns(std::size_t n) {
  std::vector<SignPattern> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    out.push_back(SignPattern::from_bits(n, bits));
  }
  return out;
}

std::vector<SignPattern> cones_with_inertia(std::size_t n, std::size_t k) {
  if (n == 0 || k > n) {
    throw Error(Errc::SpecInvalid, "cones_with_inertia requires 0 <= k <= n and n >= 1");
  }
  // Walk k-subsets of change positions {0..n-1} in lexicographic order.
  std::vector<SignPattern> out;
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  while (true) {
    std::vector<int> signs(n);
    int sign = 1;
    std::size_t next = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (next < k && pos[next] == j) {
        sign = -sign;
        ++next;
      }
      signs[j] = sign;
    }
    out.emplace_back(std::move(signs));
    if (k == 0) break;
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - k + static_cast<std::size_t>(i)) --i;
    if (i < 0) break;
    ++pos[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
  return out;
}

}  // namespace lpmchol
