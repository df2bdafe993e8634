#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kleinian {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate integer polynomial, lowest degree first. The zero
/// polynomial has no coefficients; every other value has a nonzero leading
/// coefficient.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly monomial(int degree, const Integer& c = 1);

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Integer>& coeffs() const { return coeffs_; }
  [[nodiscard]] Integer coefficient(int k) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  [[nodiscard]] std::string to_string(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Quotient and remainder of `num` by a monic divisor.
struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};
PolyDivision divide_monic(const IntPoly& num, const IntPoly& monic_divisor);

int euler_phi(int n);

/// The n-th cyclotomic polynomial, obtained by exact division of x^n - 1 by
/// every Phi_d with d | n, d < n. Results are cached process-wide.
const IntPoly& cyclotomic_polynomial(int n);

/// Element of Z[zeta_N], stored as its canonical residue modulo Phi_N:
/// phi(N) integer coefficients in the power basis 1, zeta, ..., zeta^(phi(N)-1).
/// Equality of two values of the same order is coefficientwise.
class CycInt {
public:
  /// The zero of order 1 (the ring Z).
  CycInt() : CycInt(1) {}
  explicit CycInt(int order);
  CycInt(int order, const Integer& value);

  /// Reduces an arbitrary coefficient vector in powers of zeta (any length)
  /// to canonical form.
  static CycInt from_powers(int order, std::span<const Integer> powers);

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] const std::vector<Integer>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::optional<Integer> to_integer() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt& operator*=(const Integer& k);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend CycInt operator*(CycInt a, const Integer& k) { return a *= k; }
  CycInt operator-() const;
  friend bool operator==(const CycInt& a, const CycInt& b);

  [[nodiscard]] CycInt pow(long exponent) const;
  [[nodiscard]] std::string to_string() const;

private:
  void require_same_order(const CycInt& o) const;
  int order_;
  std::vector<Integer> coeffs_;
};

/// zeta_N^k in canonical form.
CycInt root_of_unity(int order, long k);

/// Least m >= 1 with z^m = 1, if z is a root of unity. The search covers every
/// root of unity that lives in Q(zeta_N), i.e. m | lcm(2, N).
std::optional<int> is_root_of_unity(const CycInt& z);

/// The exponent k with z = zeta_N^k, when z is a power of zeta_N.
std::optional<int> root_of_unity_exponent(const CycInt& z);

/// Exact quotient a / b inside Z[zeta_N], if it exists.
std::optional<CycInt> divide_exact(const CycInt& a, const CycInt& b);

using IntMatrix = std::vector<std::vector<int>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Exact solution of A x = rhs over Q; empty if A is singular.
std::optional<std::vector<Rational>> solve_exact(const RatMatrix& a, std::vector<Rational> rhs);
std::optional<RatMatrix> inverse_exact(const RatMatrix& a);
RatMatrix to_rational(const IntMatrix& a);

long lcm_long(long a, long b);

}  // namespace kleinian
