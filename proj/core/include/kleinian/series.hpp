#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kleinian/exact.hpp"

namespace kleinian {

using Exponents = std::vector<int>;

inline bool coeff_is_zero(const Integer& c) { return c == 0; }
inline bool coeff_is_zero(const CycInt& c) { return c.is_zero(); }

/// Truncated multivariate power series with sparse exponent-vector storage.
///
/// The degree of a monomial is sum_i grading[i] * e[i]; by default every
/// grading weight is 1 (total degree). Terms of degree above the truncation
/// are never stored, and neither are zero coefficients. Iteration order is
/// lexicographic in the exponent vector.
///
/// Coeff is Integer or CycInt. `one` fixes the ring (for CycInt, its order).
template <class Coeff>
class MultiSeries {
public:
  using Terms = std::map<Exponents, Coeff>;

  MultiSeries(std::vector<std::string> variables, int truncation, Coeff one,
              std::vector<int> grading = {});

  static MultiSeries constant(const MultiSeries& like, const Coeff& c);
  static MultiSeries monomial(const MultiSeries& like, const Exponents& e, const Coeff& c);

  [[nodiscard]] const std::vector<std::string>& variables() const { return variables_; }
  [[nodiscard]] int truncation() const { return truncation_; }
  [[nodiscard]] const std::vector<int>& grading() const { return grading_; }
  [[nodiscard]] bool uniform_grading() const;
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] const Coeff& one() const { return one_; }
  [[nodiscard]] Coeff zero() const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] int degree(const Exponents& e) const;
  [[nodiscard]] Coeff coefficient(const Exponents& e) const;
  /// Adds c to the coefficient of e. Terms above the truncation are ignored.
  void add_term(const Exponents& e, const Coeff& c);

  [[nodiscard]] MultiSeries truncated(int d) const;
  /// Same series and terms, viewed under a different grading and truncation.
  [[nodiscard]] MultiSeries regraded(std::vector<int> grading, int truncation) const;

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  MultiSeries operator-() const;
  [[nodiscard]] MultiSeries scaled(const Coeff& c) const;
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) { return multiply(a, b); }

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.variables_ == b.variables_ && a.truncation_ == b.truncation_ &&
           a.grading_ == b.grading_ && a.terms_ == b.terms_;
  }

  /// The first exponent (in degree, then lexicographic order) where the two
  /// series differ below the common truncation.
  [[nodiscard]] static std::optional<Exponents> first_difference(const MultiSeries& a,
                                                                 const MultiSeries& b);

private:
  static MultiSeries multiply(const MultiSeries& a, const MultiSeries& b);
  void require_compatible(const MultiSeries& o) const;

  std::vector<std::string> variables_;
  int truncation_;
  std::vector<int> grading_;
  Coeff one_;
  Terms terms_;
};

using IntSeries = MultiSeries<Integer>;
using CycSeries = MultiSeries<CycInt>;

extern template class MultiSeries<Integer>;
extern template class MultiSeries<CycInt>;

/// Series b with a * b = 1. The degree-zero part of a must be a unit
/// constant: +-1 for Integer, a root of unity for CycInt.
template <class Coeff>
MultiSeries<Coeff> inverse(const MultiSeries<Coeff>& a);

/// Variable labels q_0, ..., q_{n-1} (or with a custom prefix).
std::vector<std::string> indexed_variables(int n, const std::string& prefix = "q");

/// Empty Integer series over the given variables.
IntSeries int_series(std::vector<std::string> variables, int truncation, std::vector<int> grading = {});

/// Coefficients of prod_{k>=1} (1 - x^k)^(-multiplicity) up to x^n.
std::vector<Integer> euler_coefficients(int multiplicity, int n);

/// prod_{k>=1} (1 - m^k)^(-multiplicity) for the monomial m with the given
/// exponents, truncated like `like`.
IntSeries euler_product(const IntSeries& like, const Exponents& m, int multiplicity);

/// sum over w in Z^r of q^(Q(w)) prod_{i=1..r} q_i^(w_i), with
/// Q(w) = 1/2 w^T C w and q = prod_{i=0..r} q_i^(marks[i]).
/// `like` supplies the r+1 variables, the grading and the truncation.
IntSeries lattice_theta(const IntMatrix& cartan, const std::vector<int>& marks, const IntSeries& like);

/// Maps q_i to the monomial images[i] in a new set of variables.
template <class Coeff>
MultiSeries<Coeff> monomial_map(const MultiSeries<Coeff>& s, std::vector<std::string> variables,
                                const std::vector<Exponents>& images, int truncation,
                                std::vector<int> grading = {});

/// Embeds an Integer series into Z[zeta_N].
CycSeries embed(const IntSeries& s, int order);

/// One rule per source variable. Phases are fractions of a full turn: the
/// phase p stands for exp(2 pi i p).
struct PhaseRule {
  bool keep = false;
  int target = -1;
  Rational phase = 0;
};

struct PhaseMap {
  std::vector<std::string> targets;
  std::vector<PhaseRule> rules;

  /// lcm of the reduced phase denominators.
  [[nodiscard]] int order() const;
};

/// Keeps the listed source variables (in order) and drops the rest.
PhaseMap make_phase_map(const std::vector<std::string>& variables, const std::vector<int>& kept,
                        const std::vector<Rational>& phases);

/// q_i -> zeta^(phase_i) * (target_i if kept). The target series keeps the
/// grading weights of the kept variables and the source truncation; the
/// result is complete only when every dropped variable has weight 0.
/// `order` 0 means the phase order; a nonzero order must be a multiple of it.
CycSeries substitute(const IntSeries& s, const PhaseMap& p, int order = 0);

struct ConstantRatio {
  bool matched = false;
  std::optional<CycInt> constant;
  std::optional<Exponents> first_mismatch;
};

/// Finds c with a = c * b below the common truncation.
ConstantRatio divide_expect_constant(const CycSeries& a, const CycSeries& b);

}  // namespace kleinian
