#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "kleinian/cartan.hpp"
#include "kleinian/parallel.hpp"
#include "kleinian/youngwalls.hpp"

namespace kleinian {
namespace {

using Vec = std::vector<long>;

long power_mod(long a, long e, long p) {
  long r = 1;
  a %= p;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
  }
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

// Reduced row echelon form over F_p; returns the nonzero rows.
std::vector<Vec> rref(std::vector<Vec> rows, std::size_t width, long p) {
  std::size_t top = 0;
  for (std::size_t c = 0; c < width && top < rows.size(); ++c) {
    std::size_t piv = top;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[top], rows[piv]);
    const long inv = power_mod(rows[top][c], p - 2, p);
    for (auto& x : rows[top]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == top || rows[i][c] == 0) continue;
      const long f = rows[i][c];
      for (std::size_t k = 0; k < width; ++k) rows[i][k] = ((rows[i][k] - f * rows[top][k]) % p + p) % p;
    }
    ++top;
  }
  rows.resize(top);
  return rows;
}

// Graded submodules of M = sum_{j in J} R^{chi_j}, R = F_p[x,y], for the
// binary dihedral group <a = diag(z, 1/z), b: (x, y) -> (y, -x)>, z of order
// 2(r-2). chi_0 is trivial; chi_1 is trivial on a and -1 on b.
class Counter {
public:
  Counter(int r, std::vector<int> labels, int max_total, long p)
      : r_(r), labels_(std::move(labels)), budget_(max_total), p_(p), window_(4 * (r - 2) + 1),
        max_degree_((max_total + 1) * window_ + 1) {
    const std::size_t n = labels_.size();
    module_.assign(n, std::vector<std::vector<Vec>>(static_cast<std::size_t>(max_degree_) + 1));
    leads_.assign(n, std::vector<std::vector<int>>(static_cast<std::size_t>(max_degree_) + 1));
    for (std::size_t a = 0; a < n; ++a)
      for (int d = 0; d <= max_degree_; ++d) {
        auto& b = module_[a][static_cast<std::size_t>(d)];
        b = semi_invariants(sign(a), d);
        for (const auto& f : b) {
          int k = d;
          while (f[static_cast<std::size_t>(k)] == 0) --k;
          leads_[a][static_cast<std::size_t>(d)].push_back(k);
        }
      }
    for (int s : {1, -1}) {
      auto& m = multipliers_[s == 1 ? 0 : 1];
      for (int e = 0; e <= max_degree_; ++e) m.push_back(semi_invariants(s, e));
    }
    chosen_.assign(n, std::vector<std::vector<Vec>>(static_cast<std::size_t>(max_degree_) + 1));
    quotient_dims_.assign(static_cast<std::size_t>(max_degree_) + 1, 0);
    v_.assign(n, 0);
  }

  std::map<Exponents, Integer> run() {
    visit(0, 0, budget_, 0);
    return counts_;
  }

private:
  [[nodiscard]] int sign(std::size_t a) const { return labels_[a] == 0 ? 1 : -1; }

  // Basis of the degree-d semi-invariants with b acting by beta, as
  // coefficient vectors indexed by the power of x.
  [[nodiscard]] std::vector<Vec> semi_invariants(int beta, int d) const {
    std::vector<Vec> out;
    const int n = 2 * (r_ - 2);
    for (int k = d; 2 * k >= d; --k) {
      const int l = d - k;
      if ((k - l) % n != 0) continue;
      Vec f(static_cast<std::size_t>(d) + 1, 0);
      if (k == l) {
        if ((k % 2 == 0 ? 1 : -1) != beta) continue;
        f[static_cast<std::size_t>(k)] = 1;
      } else {
        f[static_cast<std::size_t>(k)] = 1;
        const long s = beta * (l % 2 == 0 ? 1 : -1);
        f[static_cast<std::size_t>(l)] = (s + p_) % p_;
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  [[nodiscard]] Vec to_poly(std::size_t a, int d, const Vec& coords) const {
    Vec f(static_cast<std::size_t>(d) + 1, 0);
    const auto& basis = module_[a][static_cast<std::size_t>(d)];
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] == 0) continue;
      for (std::size_t k = 0; k < f.size(); ++k) f[k] = (f[k] + coords[i] * basis[i][k]) % p_;
    }
    return f;
  }

  [[nodiscard]] Vec multiply(const Vec& f, const Vec& g) const {
    Vec out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == 0) continue;
      for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = (out[i + j] + f[i] * g[j]) % p_;
    }
    return out;
  }

  // Everything in degree d that the module structure forces into N.
  [[nodiscard]] std::vector<Vec> forced(std::size_t a, int d) const {
    const std::size_t width = module_[a][static_cast<std::size_t>(d)].size();
    std::vector<Vec> rows;
    for (std::size_t b = 0; b < labels_.size(); ++b) {
      const auto& mult = multipliers_[sign(a) * sign(b) == 1 ? 0 : 1];
      for (int d2 = 0; d2 < d; ++d2) {
        const auto& mu = mult[static_cast<std::size_t>(d - d2)];
        if (mu.empty()) continue;
        for (const auto& row : chosen_[b][static_cast<std::size_t>(d2)]) {
          const Vec f = to_poly(b, d2, row);
          for (const auto& s : mu) {
            const Vec g = multiply(f, s);
            Vec c(width);
            for (std::size_t i = 0; i < width; ++i)
              c[i] = g[static_cast<std::size_t>(leads_[a][static_cast<std::size_t>(d)][i])];
            rows.push_back(std::move(c));
          }
        }
      }
    }
    return rref(std::move(rows), width, p_);
  }

  void visit(int d, std::size_t a, int budget, int zeros) {
    if (a == labels_.size()) {
      const int z = quotient_dims_[static_cast<std::size_t>(d)] == 0 ? zeros + 1 : 0;
      // The quotient is cyclic, generated in degree 0, and the algebra is
      // generated in degrees below the window; a zero window ends it.
      if (budget == 0 || z >= window_) {
        counts_[v_] += 1;
        return;
      }
      if (d + 1 > max_degree_) throw std::logic_error("graded quot: degree bound exceeded");
      visit(d + 1, 0, budget, z);
      return;
    }
    const std::size_t width = module_[a][static_cast<std::size_t>(d)].size();
    const auto base = forced(a, d);
    std::vector<std::size_t> free;
    {
      std::vector<bool> pivot(width, false);
      for (const auto& row : base) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        pivot[c] = true;
      }
      for (std::size_t c = 0; c < width; ++c)
        if (!pivot[c]) free.push_back(c);
    }
    const int q = static_cast<int>(free.size());
    auto& slot = chosen_[a][static_cast<std::size_t>(d)];
    for (int codim = 0; codim <= std::min(q, budget); ++codim) {
      const int k = q - codim;
      std::vector<int> pivots(static_cast<std::size_t>(k));
      std::function<void(int, int)> pick = [&](int i, int start) {
        if (i < k) {
          for (int c = start; c < q; ++c) {
            pivots[static_cast<std::size_t>(i)] = c;
            pick(i + 1, c + 1);
          }
          return;
        }
        // Echelon subspaces of F_p^q with these pivots.
        std::vector<std::pair<int, int>> entries;
        for (int t = 0; t < k; ++t)
          for (int c = pivots[static_cast<std::size_t>(t)] + 1; c < q; ++c)
            if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) entries.emplace_back(t, c);
        long total = 1;
        for (std::size_t e = 0; e < entries.size(); ++e) total *= p_;
        for (long code = 0; code < total; ++code) {
          std::vector<Vec> rows = base;
          std::vector<Vec> sub(static_cast<std::size_t>(k), Vec(width, 0));
          for (int t = 0; t < k; ++t) sub[static_cast<std::size_t>(t)][free[static_cast<std::size_t>(pivots[static_cast<std::size_t>(t)])]] = 1;
          long rest = code;
          for (const auto& [t, c] : entries) {
            sub[static_cast<std::size_t>(t)][free[static_cast<std::size_t>(c)]] = rest % p_;
            rest /= p_;
          }
          rows.insert(rows.end(), sub.begin(), sub.end());
          slot = std::move(rows);
          v_[a] += codim;
          quotient_dims_[static_cast<std::size_t>(d)] += codim;
          visit(d, a + 1, budget - codim, zeros);
          v_[a] -= codim;
          quotient_dims_[static_cast<std::size_t>(d)] -= codim;
        }
      };
      pick(0, 0);
    }
    slot.clear();
  }

  int r_;
  std::vector<int> labels_;
  int budget_;
  long p_;
  int window_;
  int max_degree_;
  std::vector<std::vector<std::vector<Vec>>> module_;
  std::vector<std::vector<std::vector<int>>> leads_;
  std::vector<std::vector<Vec>> multipliers_[2];
  std::vector<std::vector<std::vector<Vec>>> chosen_;
  std::vector<int> quotient_dims_;
  Exponents v_;
  std::map<Exponents, Integer> counts_;
};

std::vector<int> checked_labels(int r, const std::vector<int>& j) {
  if (r < 4) throw std::invalid_argument("graded quot: rank must be at least 4");
  auto labels = normalize_labels(j, r);
  if (labels.front() != 0 || labels.back() > 1)
    throw std::runtime_error("graded quot: only J = {0} and J = {0,1} are supported");
  return labels;
}

Rational interpolate_at(const std::vector<long>& xs, const std::vector<Integer>& ys, std::size_t k, long x0) {
  Rational s = 0;
  for (std::size_t i = 0; i < k; ++i) {
    Rational t = ys[i];
    for (std::size_t m = 0; m < k; ++m)
      if (m != i) t *= Rational(x0 - xs[m]) / Rational(xs[i] - xs[m]);
    s += t;
  }
  return s;
}

}  // namespace

std::map<Exponents, Integer> graded_quot_point_counts(int r, const std::vector<int>& j, int d, long p) {
  const auto labels = checked_labels(r, j);
  if (d < 0) throw std::invalid_argument("graded quot: negative truncation");
  if (!is_prime(p) || p == 2 || (4L * (r - 2)) % p == 0)
    throw std::invalid_argument("graded quot: p must be an odd prime not dividing the group order");
  Counter c(r, labels, d, p);
  return c.run();
}

IntSeries quot_euler_series_D(int r, const std::vector<int>& j, int d) {
  const auto labels = checked_labels(r, j);
  std::vector<long> primes;
  for (long p = 3; primes.size() < 9; p += 2)
    if (is_prime(p) && (4L * (r - 2)) % p != 0) primes.push_back(p);
  auto counts = parallel_map(primes.size(),
                             [&](std::size_t i) { return graded_quot_point_counts(r, labels, d, primes[i]); });
  std::vector<std::string> vars;
  for (int v : labels) vars.push_back("q_" + std::to_string(v));
  IntSeries out = int_series(vars, d);
  std::set<Exponents> support;
  for (const auto& c : counts)
    for (const auto& term : c) support.insert(term.first);
  for (const auto& v : support) {
    std::vector<Integer> ys;
    for (const auto& c : counts) {
      auto it = c.find(v);
      ys.push_back(it == c.end() ? Integer(0) : it->second);
    }
    // Smallest interpolating polynomial that predicts the next two primes.
    std::optional<Rational> at_one;
    for (std::size_t k = 1; k + 2 <= primes.size(); ++k) {
      if (interpolate_at(primes, ys, k, primes[k]) == ys[k] &&
          interpolate_at(primes, ys, k, primes[k + 1]) == ys[k + 1]) {
        at_one = interpolate_at(primes, ys, k, 1);
        break;
      }
    }
    if (!at_one || at_one->get_den() != 1)
      throw std::runtime_error("graded quot: point counts are not polynomial in the prime");
    out.add_term(v, at_one->get_num());
  }
  return out;
}

}  // namespace kleinian
