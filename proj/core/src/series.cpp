#include "kleinian/series.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kleinian/lattice.hpp"

namespace kleinian {

template <class Coeff>
MultiSeries<Coeff>::MultiSeries(std::vector<std::string> variables, int truncation, Coeff one,
                                std::vector<int> grading)
    : variables_(std::move(variables)), truncation_(truncation), grading_(std::move(grading)),
      one_(std::move(one)) {
  if (truncation_ < 0) throw std::invalid_argument("series: negative truncation");
  if (grading_.empty()) grading_.assign(variables_.size(), 1);
  if (grading_.size() != variables_.size())
    throw std::invalid_argument("series: grading length differs from variable count");
  for (int g : grading_)
    if (g < 0) throw std::invalid_argument("series: negative grading weight");
}

template <class Coeff>
MultiSeries<Coeff> MultiSeries<Coeff>::constant(const MultiSeries& like, const Coeff& c) {
  return monomial(like, Exponents(like.variables_.size(), 0), c);
}

template <class Coeff>
MultiSeries<Coeff> MultiSeries<Coeff>::monomial(const MultiSeries& like, const Exponents& e,
                                                const Coeff& c) {
  MultiSeries out(like.variables_, like.truncation_, like.one_, like.grading_);
  out.add_term(e, c);
  return out;
}

template <class Coeff>
bool MultiSeries<Coeff>::uniform_grading() const {
  return std::all_of(grading_.begin(), grading_.end(), [](int g) { return g == 1; });
}

template <class Coeff>
Coeff MultiSeries<Coeff>::zero() const {
  Coeff z = one_;
  z *= Integer(0);
  return z;
}

template <class Coeff>
int MultiSeries<Coeff>::degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += grading_[i] * e[i];
  return d;
}

template <class Coeff>
Coeff MultiSeries<Coeff>::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? zero() : it->second;
}

template <class Coeff>
void MultiSeries<Coeff>::add_term(const Exponents& e, const Coeff& c) {
  if (e.size() != variables_.size()) throw std::invalid_argument("series: exponent length mismatch");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("series: negative exponent");
  if (degree(e) > truncation_ || coeff_is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (coeff_is_zero(it->second)) terms_.erase(it);
}

template <class Coeff>
MultiSeries<Coeff> MultiSeries<Coeff>::truncated(int d) const {
  MultiSeries out(variables_, std::min(d, truncation_), one_, grading_);
  for (const auto& [e, c] : terms_)
    if (degree(e) <= out.truncation_) out.terms_.emplace(e, c);
  return out;
}

template <class Coeff>
MultiSeries<Coeff> MultiSeries<Coeff>::regraded(std::vector<int> grading, int truncation) const {
  MultiSeries out(variables_, truncation, one_, std::move(grading));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

template <class Coeff>
void MultiSeries<Coeff>::require_compatible(const MultiSeries& o) const {
  if (variables_ != o.variables_) throw std::invalid_argument("series: variable lists differ");
  if (grading_ != o.grading_) throw std::invalid_argument("series: gradings differ");
}

template <class Coeff>
MultiSeries<Coeff>& MultiSeries<Coeff>::operator+=(const MultiSeries& o) {
  require_compatible(o);
  if (o.truncation_ < truncation_) *this = truncated(o.truncation_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

template <class Coeff>
MultiSeries<Coeff>& MultiSeries<Coeff>::operator-=(const MultiSeries& o) {
  return *this += -o;
}

template <class Coeff>
MultiSeries<Coeff> MultiSeries<Coeff>::operator-() const {
  MultiSeries out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

template <class Coeff>
MultiSeries<Coeff> MultiSeries<Coeff>::scaled(const Coeff& k) const {
  MultiSeries out(variables_, truncation_, one_, grading_);
  for (const auto& [e, c] : terms_) {
    Coeff v = c;
    v *= k;
    out.add_term(e, v);
  }
  return out;
}

template <class Coeff>
MultiSeries<Coeff> MultiSeries<Coeff>::multiply(const MultiSeries& a, const MultiSeries& b) {
  a.require_compatible(b);
  MultiSeries out(a.variables_, std::min(a.truncation_, b.truncation_), a.one_, a.grading_);
  struct Entry {
    int degree;
    const Exponents* e;
    const Coeff* c;
  };
  std::vector<Entry> bs;
  bs.reserve(b.terms_.size());
  for (const auto& [e, c] : b.terms_) bs.push_back({b.degree(e), &e, &c});
  std::stable_sort(bs.begin(), bs.end(), [](const Entry& x, const Entry& y) { return x.degree < y.degree; });
  Exponents sum(a.variables_.size());
  for (const auto& [ea, ca] : a.terms_) {
    const int da = a.degree(ea);
    if (da > out.truncation_) continue;
    for (const Entry& eb : bs) {
      if (da + eb.degree > out.truncation_) break;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + (*eb.e)[i];
      Coeff p = ca;
      p *= *eb.c;
      out.add_term(sum, p);
    }
  }
  return out;
}

template <class Coeff>
std::optional<Exponents> MultiSeries<Coeff>::first_difference(const MultiSeries& a,
                                                              const MultiSeries& b) {
  a.require_compatible(b);
  const int d = std::min(a.truncation_, b.truncation_);
  std::set<std::pair<int, Exponents>> keys;
  for (const auto& [e, c] : a.terms_)
    if (a.degree(e) <= d) keys.emplace(a.degree(e), e);
  for (const auto& [e, c] : b.terms_)
    if (b.degree(e) <= d) keys.emplace(b.degree(e), e);
  for (const auto& [deg, e] : keys)
    if (!(a.coefficient(e) == b.coefficient(e))) return e;
  return std::nullopt;
}

template class MultiSeries<Integer>;
template class MultiSeries<CycInt>;

namespace {

Integer unit_inverse(const Integer& c) {
  if (c != 1 && c != -1) throw std::domain_error("inverse: constant term is not a unit");
  return c;
}

CycInt unit_inverse(const CycInt& c) {
  auto m = is_root_of_unity(c);
  if (!m) throw std::domain_error("inverse: constant term is not a root of unity");
  return c.pow(*m - 1);
}

}  // namespace

template <class Coeff>
MultiSeries<Coeff> inverse(const MultiSeries<Coeff>& a) {
  const Exponents origin(a.variables().size(), 0);
  for (const auto& [e, c] : a.terms())
    if (a.degree(e) == 0 && e != origin)
      throw std::domain_error("inverse: degree-zero part is not constant");
  const Coeff c0 = a.coefficient(origin);
  if (coeff_is_zero(c0)) throw std::domain_error("inverse: zero constant term");
  const Coeff c0_inv = unit_inverse(c0);
  const auto one = MultiSeries<Coeff>::constant(a, a.one());
  // a = c0 (1 - t) with t of positive degree; 1/(1 - t) = 1 + t (1 + t (...)).
  const MultiSeries<Coeff> t = one - a.scaled(c0_inv);
  MultiSeries<Coeff> s = one;
  for (int k = 0; k < a.truncation(); ++k) s = one + t * s;
  return s.scaled(c0_inv);
}

template IntSeries inverse(const IntSeries&);
template CycSeries inverse(const CycSeries&);

std::vector<std::string> indexed_variables(int n, const std::string& prefix) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + "_" + std::to_string(i));
  return out;
}

IntSeries int_series(std::vector<std::string> variables, int truncation, std::vector<int> grading) {
  return IntSeries(std::move(variables), truncation, Integer(1), std::move(grading));
}

std::vector<Integer> euler_coefficients(int multiplicity, int n) {
  if (multiplicity < 0) throw std::invalid_argument("euler_coefficients: negative multiplicity");
  std::vector<Integer> c(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  c[0] = 1;
  for (int pass = 0; pass < multiplicity; ++pass)
    for (int k = 1; k <= n; ++k)
      for (int j = k; j <= n; ++j) c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - k)];
  return c;
}

IntSeries euler_product(const IntSeries& like, const Exponents& m, int multiplicity) {
  if (std::all_of(m.begin(), m.end(), [](int x) { return x == 0; }))
    throw std::invalid_argument("euler_product: zero exponent vector");
  const int deg = like.degree(m);
  if (deg <= 0) throw std::domain_error("euler_product: monomial has degree zero");
  const int n = like.truncation() / deg;
  auto coeffs = euler_coefficients(multiplicity, n);
  IntSeries out(like.variables(), like.truncation(), Integer(1), like.grading());
  Exponents e(m.size());
  for (int j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i < m.size(); ++i) e[i] = j * m[i];
    out.add_term(e, coeffs[static_cast<std::size_t>(j)]);
  }
  return out;
}

IntSeries lattice_theta(const IntMatrix& cartan, const std::vector<int>& marks, const IntSeries& like) {
  const std::size_t r = cartan.size();
  if (like.variables().size() != r + 1 || marks.size() != r + 1)
    throw std::invalid_argument("lattice_theta: need rank + 1 variables and marks");
  for (std::size_t i = 0; i < r; ++i)
    if (cartan[i][i] % 2 != 0) throw std::domain_error("lattice_theta: odd diagonal entry");
  const auto& g = like.grading();
  long total_weight = 0;
  for (std::size_t i = 0; i <= r; ++i) total_weight += static_cast<long>(g[i]) * marks[i];
  if (total_weight <= 0) throw std::domain_error("lattice_theta: q has degree zero");
  // degree = G Q(w) + sum_i g_i w_i
  RatMatrix a = to_rational(cartan);
  for (auto& row : a)
    for (auto& x : row) x *= total_weight;
  std::vector<Rational> b(r);
  for (std::size_t i = 0; i < r; ++i) b[i] = g[i + 1];
  const RatMatrix c = to_rational(cartan);
  const std::vector<Rational> no_linear(r, 0);
  IntSeries out(like.variables(), like.truncation(), Integer(1), like.grading());
  Exponents e(r + 1);
  for (const auto& w : lattice_points(a, b, Rational(like.truncation()))) {
    const Rational q = quadratic_value(c, no_linear, w);
    const long qi = q.get_num().get_si();
    e[0] = static_cast<int>(marks[0] * qi);
    for (std::size_t i = 1; i <= r; ++i) e[i] = static_cast<int>(marks[i] * qi + w[i - 1]);
    for (int x : e)
      if (x < 0) throw std::domain_error("lattice_theta: negative exponent; marks are not admissible");
    out.add_term(e, 1);
  }
  return out;
}

template <class Coeff>
MultiSeries<Coeff> monomial_map(const MultiSeries<Coeff>& s, std::vector<std::string> variables,
                                const std::vector<Exponents>& images, int truncation,
                                std::vector<int> grading) {
  if (images.size() != s.variables().size())
    throw std::invalid_argument("monomial_map: one image per source variable required");
  MultiSeries<Coeff> out(std::move(variables), truncation, s.one(), std::move(grading));
  const std::size_t n = out.variables().size();
  for (const auto& img : images)
    if (img.size() != n) throw std::invalid_argument("monomial_map: image length mismatch");
  Exponents e(n);
  for (const auto& [src, c] : s.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < src.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) e[j] += src[i] * images[i][j];
    out.add_term(e, c);
  }
  return out;
}

template IntSeries monomial_map(const IntSeries&, std::vector<std::string>, const std::vector<Exponents>&,
                                int, std::vector<int>);
template CycSeries monomial_map(const CycSeries&, std::vector<std::string>, const std::vector<Exponents>&,
                                int, std::vector<int>);

CycSeries embed(const IntSeries& s, int order) {
  CycSeries out(s.variables(), s.truncation(), CycInt(order, 1), s.grading());
  for (const auto& [e, c] : s.terms()) out.add_term(e, CycInt(order, c));
  return out;
}

int PhaseMap::order() const {
  long n = 1;
  for (const auto& rule : rules) {
    Rational p = rule.phase;
    p.canonicalize();
    n = lcm_long(n, p.get_den().get_si());
  }
  return static_cast<int>(n);
}

PhaseMap make_phase_map(const std::vector<std::string>& variables, const std::vector<int>& kept,
                        const std::vector<Rational>& phases) {
  if (phases.size() != variables.size()) throw std::invalid_argument("make_phase_map: one phase per variable");
  PhaseMap p;
  p.rules.resize(variables.size());
  for (std::size_t i = 0; i < variables.size(); ++i) p.rules[i].phase = phases[i];
  for (int k : kept) {
    if (k < 0 || k >= static_cast<int>(variables.size()))
      throw std::invalid_argument("make_phase_map: kept variable out of range");
    auto& rule = p.rules[static_cast<std::size_t>(k)];
    rule.keep = true;
    rule.target = static_cast<int>(p.targets.size());
    p.targets.push_back(variables[static_cast<std::size_t>(k)]);
  }
  return p;
}

CycSeries substitute(const IntSeries& s, const PhaseMap& p, int order) {
  const std::size_t n = s.variables().size();
  if (p.rules.size() != n) throw std::invalid_argument("substitute: one rule per variable required");
  const int needed = p.order();
  if (order == 0) order = needed;
  if (order % needed != 0)
    throw std::invalid_argument("substitute: phase-order mismatch (" + std::to_string(order) +
                                " is not a multiple of " + std::to_string(needed) + ")");
  std::vector<int> grading(p.targets.size(), -1);
  std::vector<long> steps(n);
  for (std::size_t i = 0; i < n; ++i) {
    const PhaseRule& rule = p.rules[i];
    Rational k = rule.phase * order;
    k.canonicalize();
    steps[i] = k.get_num().get_si();
    if (!rule.keep) continue;
    if (rule.target < 0 || rule.target >= static_cast<int>(p.targets.size()))
      throw std::invalid_argument("substitute: target variable out of range");
    int& g = grading[static_cast<std::size_t>(rule.target)];
    if (g >= 0 && g != s.grading()[i]) throw std::invalid_argument("substitute: inconsistent target grading");
    g = s.grading()[i];
  }
  for (int& g : grading)
    if (g < 0) g = 1;
  std::vector<CycInt> powers;
  for (int k = 0; k < order; ++k) powers.push_back(root_of_unity(order, k));
  CycSeries out(p.targets, s.truncation(), CycInt(order, 1), grading);
  Exponents e(p.targets.size());
  for (const auto& [src, c] : s.terms()) {
    std::fill(e.begin(), e.end(), 0);
    long k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      k += steps[i] * src[i];
      if (p.rules[i].keep) e[static_cast<std::size_t>(p.rules[i].target)] += src[i];
    }
    k %= order;
    if (k < 0) k += order;
    out.add_term(e, powers[static_cast<std::size_t>(k)] * c);
  }
  return out;
}

ConstantRatio divide_expect_constant(const CycSeries& a, const CycSeries& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_expect_constant: zero divisor series");
  if (a.variables() != b.variables() || a.grading() != b.grading())
    throw std::invalid_argument("divide_expect_constant: incompatible series");
  if (a.one().order() != b.one().order())
    throw std::invalid_argument("divide_expect_constant: cyclotomic orders differ");
  const int d = std::min(a.truncation(), b.truncation());
  std::set<std::pair<int, Exponents>> keys;
  for (const auto& [e, c] : a.terms())
    if (a.degree(e) <= d) keys.emplace(a.degree(e), e);
  for (const auto& [e, c] : b.terms())
    if (b.degree(e) <= d) keys.emplace(b.degree(e), e);
  ConstantRatio out;
  for (const auto& [deg, e] : keys) {
    const CycInt ae = a.coefficient(e);
    const CycInt be = b.coefficient(e);
    if (!out.constant) {
      if (be.is_zero()) {
        out.first_mismatch = e;
        return out;
      }
      out.constant = divide_exact(ae, be);
      if (!out.constant) {
        out.first_mismatch = e;
        return out;
      }
      continue;
    }
    if (!(ae == *out.constant * be)) {
      out.first_mismatch = e;
      return out;
    }
  }
  out.matched = out.constant.has_value();
  return out;
}

}  // namespace kleinian
