#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Big = long long;

/// p(0..n) by Euler's pentagonal recurrence.
inline std::vector<Big> partition_numbers(int n) {
  std::vector<Big> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Big s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const Big sign = (k % 2 == 1) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) s += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = s;
  }
  return p;
}

/// Univariate power series product, truncated at degree n.
inline std::vector<Big> mul(const std::vector<Big>& a, const std::vector<Big>& b, int n) {
  std::vector<Big> c(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(n); ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(n); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// Number of t-cores of each weight up to n: prod_k (1 - q^{tk})^t / (1 - q^k).
inline std::vector<Big> core_counts(int t, int n) {
  std::vector<Big> out(static_cast<std::size_t>(n) + 1, 0);
  out[0] = 1;
  for (int k = 1; k <= n; ++k) {
    // divide by (1 - q^k)
    for (int i = k; i <= n; ++i) out[static_cast<std::size_t>(i)] += out[static_cast<std::size_t>(i - k)];
  }
  for (int k = 1; t * k <= n; ++k)
    for (int rep = 0; rep < t; ++rep)
      for (int i = n; i >= t * k; --i) out[static_cast<std::size_t>(i)] -= out[static_cast<std::size_t>(i - t * k)];
  return out;
}

/// Parts of a partition as a plain vector; hook lengths computed directly.
inline bool is_core_by_hooks(const std::vector<int>& parts, int t) {
  std::vector<int> conj;
  if (!parts.empty()) {
    conj.assign(static_cast<std::size_t>(parts[0]), 0);
    for (int p : parts)
      for (int a = 0; a < p; ++a) ++conj[static_cast<std::size_t>(a)];
  }
  for (std::size_t b = 0; b < parts.size(); ++b)
    for (int a = 0; a < parts[b]; ++a) {
      const int hook = (parts[b] - a - 1) + (conj[static_cast<std::size_t>(a)] - static_cast<int>(b) - 1) + 1;
      if (hook % t == 0) return false;
    }
  return true;
}

/// Two-variable series {(i, j) -> coeff} truncated at total degree n.
using Series2 = std::map<std::pair<int, int>, Big>;

inline Series2 mul2(const Series2& a, const Series2& b, int n) {
  Series2 c;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      const std::pair<int, int> e{ea.first + eb.first, ea.second + eb.second};
      if (e.first + e.second <= n) c[e] += ca * cb;
    }
  for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

/// The checkerboard product prod_k (1+x^{2k-1}y^{2k})(1+x^{2k-1}y^{2k-2}) / ((1-x^k y^k)(1-x^{2k-1}y^{2k-1})).
inline Series2 checkerboard_product(int n) {
  Series2 out{{{0, 0}, 1}};
  auto geometric = [&](int i, int j) {
    Series2 g;
    for (int t = 0; t * (i + j) <= n; ++t) g[{t * i, t * j}] = 1;
    return g;
  };
  for (int k = 1; k <= n; ++k) {
    out = mul2(out, Series2{{{0, 0}, 1}, {{2 * k - 1, 2 * k}, 1}}, n);
    out = mul2(out, Series2{{{0, 0}, 1}, {{2 * k - 1, 2 * k - 2}, 1}}, n);
    out = mul2(out, geometric(k, k), n);
    out = mul2(out, geometric(2 * k - 1, 2 * k - 1), n);
  }
  return out;
}

/// Coefficients of the Gaussian binomial (a+b choose a) by the q-Pascal rule.
inline std::vector<Big> gaussian_binomial(int a, int b) {
  std::vector<std::vector<std::vector<Big>>> memo(static_cast<std::size_t>(a) + 1,
                                                  std::vector<std::vector<Big>>(static_cast<std::size_t>(b) + 1));
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) {
      auto& cur = memo[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i == 0 || j == 0) {
        cur = {1};
        continue;
      }
      // [i+j, i] = [i+j-1, i-1] + q^i [i+j-1, i]
      const auto& x = memo[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
      const auto& y = memo[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
      cur.assign(static_cast<std::size_t>(i * j) + 1, 0);
      for (std::size_t k = 0; k < x.size(); ++k) cur[k] += x[k];
      for (std::size_t k = 0; k < y.size(); ++k) cur[k + static_cast<std::size_t>(i)] += y[k];
    }
  return memo[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

inline std::complex<double> evaluate(const std::vector<Big>& poly, std::complex<double> z) {
  std::complex<double> s = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) s = s * z + static_cast<double>(*it);
  return s;
}

inline std::complex<double> root(int n, long k) {
  const double pi = std::acos(-1.0);
  return std::polar(1.0, 2 * pi * static_cast<double>(k) / n);
}

/// All partitions of n, as part vectors.
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// A random partition of weight n (not uniformly distributed).
inline std::vector<int> random_partition(std::mt19937& rng, int n) {
  std::vector<int> parts;
  int rest = n;
  while (rest > 0) {
    const int cap = parts.empty() ? rest : std::min(rest, parts.back());
    std::uniform_int_distribution<int> pick(1, cap);
    parts.push_back(pick(rng));
    rest -= parts.back();
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace oracle
