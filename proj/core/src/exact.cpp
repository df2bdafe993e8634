#include "kleinian/exact.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kleinian {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(int degree, const Integer& c) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

Integer IntPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

PolyDivision divide_monic(const IntPoly& num, const IntPoly& divisor) {
  if (divisor.is_zero() || divisor.coeffs().back() != 1)
    throw std::invalid_argument("divide_monic: divisor must be monic");
  std::vector<Integer> rem = num.coeffs();
  const int dd = divisor.degree();
  if (num.degree() < dd) return {IntPoly{}, num};
  std::vector<Integer> quot(static_cast<std::size_t>(num.degree() - dd + 1), 0);
  for (int k = num.degree(); k >= dd; --k) {
    Integer lead = rem[static_cast<std::size_t>(k)];
    if (lead == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = lead;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= lead * divisor.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const IntPoly& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  IntPoly poly = IntPoly::monomial(n) - IntPoly::monomial(0);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    PolyDivision qr = divide_monic(poly, cyclotomic_polynomial(d));
    if (!qr.remainder.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    poly = std::move(qr.quotient);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

// ---------------------------------------------------------------- CycInt

CycInt::CycInt(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("CycInt order must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), 0);
}

CycInt::CycInt(int order, const Integer& value) : CycInt(order) { coeffs_[0] = value; }

CycInt CycInt::from_powers(int order, std::span<const Integer> powers) {
  CycInt out(order);
  const IntPoly& phi = cyclotomic_polynomial(order);
  const auto dim = out.coeffs_.size();
  std::vector<Integer> work(powers.begin(), powers.end());
  // Reduce from the top using Phi_N monic: x^dim = -(lower terms).
  for (std::size_t k = work.size(); k-- > dim;) {
    if (work[k] == 0) continue;
    Integer lead = work[k];
    work[k] = 0;
    for (std::size_t j = 0; j < dim; ++j) {
      const Integer& pj = phi.coeffs()[j];
      if (pj != 0) work[k - dim + j] -= lead * pj;
    }
  }
  for (std::size_t j = 0; j < dim && j < work.size(); ++j) out.coeffs_[j] = work[j];
  return out;
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Integer> CycInt::to_integer() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return std::nullopt;
  return coeffs_[0];
}

void CycInt::require_same_order(const CycInt& o) const {
  if (order_ != o.order_)
    throw std::invalid_argument("CycInt order mismatch: " + std::to_string(order_) + " vs " +
                                std::to_string(o.order_));
}

CycInt& CycInt::operator+=(const CycInt& o) {
  require_same_order(o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  require_same_order(o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  require_same_order(o);
  const auto dim = coeffs_.size();
  std::vector<Integer> prod(2 * dim - 1, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j)
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  *this = from_powers(order_, prod);
  return *this;
}

CycInt& CycInt::operator*=(const Integer& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const CycInt& a, const CycInt& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

CycInt CycInt::pow(long exponent) const {
  if (exponent < 0) throw std::invalid_argument("CycInt::pow: negative exponent");
  CycInt result(order_, 1);
  CycInt base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string CycInt::to_string() const {
  std::vector<Integer> c = coeffs_;
  return IntPoly(std::move(c)).to_string("z" + std::to_string(order_));
}

CycInt root_of_unity(int order, long k) {
  if (order < 1) throw std::invalid_argument("root_of_unity: order must be positive");
  long e = k % order;
  if (e < 0) e += order;
  std::vector<Integer> powers(static_cast<std::size_t>(e) + 1, 0);
  powers.back() = 1;
  return CycInt::from_powers(order, powers);
}

std::optional<int> is_root_of_unity(const CycInt& z) {
  if (z.is_zero()) throw std::invalid_argument("is_root_of_unity: zero has no multiplicative order");
  const CycInt one(z.order(), 1);
  const long limit = lcm_long(2, z.order());
  CycInt power = z;
  for (long m = 1; m <= limit; ++m) {
    if (power == one) return static_cast<int>(m);
    power *= z;
  }
  return std::nullopt;
}

std::optional<int> root_of_unity_exponent(const CycInt& z) {
  for (int k = 0; k < z.order(); ++k)
    if (root_of_unity(z.order(), k) == z) return k;
  return std::nullopt;
}

std::optional<CycInt> divide_exact(const CycInt& a, const CycInt& b) {
  if (a.order() != b.order()) throw std::invalid_argument("divide_exact: order mismatch");
  if (b.is_zero()) return std::nullopt;
  const int order = a.order();
  const auto dim = a.coeffs().size();
  // Column j of the matrix is b * zeta^j.
  RatMatrix m(dim, std::vector<Rational>(dim, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    CycInt col = b * root_of_unity(order, static_cast<long>(j));
    for (std::size_t i = 0; i < dim; ++i) m[i][j] = col.coeffs()[i];
  }
  std::vector<Rational> rhs(dim);
  for (std::size_t i = 0; i < dim; ++i) rhs[i] = a.coeffs()[i];
  auto x = solve_exact(m, std::move(rhs));
  if (!x) return std::nullopt;
  std::vector<Integer> coeffs(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Rational v = (*x)[i];
    v.canonicalize();
    if (v.get_den() != 1) return std::nullopt;
    coeffs[i] = v.get_num();
  }
  return CycInt::from_powers(order, coeffs);
}

// ------------------------------------------------------- exact linear algebra

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int v : a[i]) out[i].emplace_back(v);
  return out;
}

std::optional<std::vector<Rational>> solve_exact(const RatMatrix& a, std::vector<Rational> rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) throw std::invalid_argument("solve_exact: dimension mismatch");
  RatMatrix m = a;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] /= m[i][i];
    rhs[i].canonicalize();
  }
  return rhs;
}

std::optional<RatMatrix> inverse_exact(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, 0);
    e[j] = 1;
    auto col = solve_exact(a, std::move(e));
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = (*col)[i];
  }
  return inv;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace kleinian
