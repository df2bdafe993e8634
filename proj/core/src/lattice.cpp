#include "kleinian/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace kleinian {
namespace {

struct Ldl {
  RatMatrix lower;  // unit lower triangular
  std::vector<Rational> diag;
};

Ldl factor(const RatMatrix& a) {
  const std::size_t n = a.size();
  Ldl f{RatMatrix(n, std::vector<Rational>(n, 0)), std::vector<Rational>(n, 0)};
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j].size() != n) throw std::invalid_argument("lattice: matrix is not square");
    Rational d = a[j][j];
    for (std::size_t k = 0; k < j; ++k) d -= f.lower[j][k] * f.lower[j][k] * f.diag[k];
    if (d <= 0) throw std::domain_error("lattice: matrix is not positive definite");
    f.diag[j] = d;
    f.lower[j][j] = 1;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (a[i][j] != a[j][i]) throw std::domain_error("lattice: matrix is not symmetric");
      Rational s = a[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= f.lower[i][k] * f.lower[j][k] * f.diag[k];
      f.lower[i][j] = s / d;
    }
  }
  return f;
}

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

struct Search {
  const Ldl& f;
  const std::vector<Rational>& center;
  std::vector<LatticePoint>& out;
  LatticePoint w;

  void run(std::size_t k, const Rational& budget) {
    const std::size_t n = w.size();
    Rational t = center[k];
    for (std::size_t i = k + 1; i < n; ++i) t -= f.lower[i][k] * (Rational(w[i]) - center[i]);
    const Rational half = f.diag[k] / 2;
    auto cost = [&](long v) -> Rational {
      Rational d = Rational(v) - t;
      return half * d * d;
    };
    const long start = floor_of(t).get_si();
    for (long v = start;; --v) {
      Rational c = cost(v);
      if (c > budget) break;
      visit(k, v, budget - c);
    }
    for (long v = start + 1;; ++v) {
      Rational c = cost(v);
      if (c > budget) break;
      visit(k, v, budget - c);
    }
  }

  void visit(std::size_t k, long v, const Rational& rest) {
    w[k] = v;
    if (k == 0)
      out.push_back(w);
    else
      run(k - 1, rest);
  }
};

}  // namespace

Rational quadratic_value(const RatMatrix& a, const std::vector<Rational>& b, const LatticePoint& w) {
  Rational q = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) q += a[i][j] * w[i] * w[j];
  }
  q /= 2;
  for (std::size_t i = 0; i < w.size(); ++i) q += b[i] * w[i];
  return q;
}

std::vector<LatticePoint> lattice_points(const RatMatrix& a, const std::vector<Rational>& b,
                                         const Rational& bound) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("lattice: dimension mismatch");
  std::vector<LatticePoint> out;
  if (n == 0) {
    if (bound >= 0) out.emplace_back();
    return out;
  }
  Ldl f = factor(a);
  // Minimizer z = -A^{-1} b; the form equals 1/2 (w-z)^T A (w-z) - 1/2 z^T A z.
  std::vector<Rational> neg_b(n);
  for (std::size_t i = 0; i < n; ++i) neg_b[i] = -b[i];
  auto z = solve_exact(a, neg_b);
  if (!z) throw std::domain_error("lattice: singular matrix");
  Rational shift = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) shift += a[i][j] * (*z)[i] * (*z)[j];
  Rational budget = bound + shift / 2;
  if (budget < 0) return out;
  Search s{f, *z, out, LatticePoint(n, 0)};
  s.run(n - 1, budget);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kleinian
