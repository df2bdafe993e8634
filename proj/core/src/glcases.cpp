#include "kleinian/glcases.hpp"

#include <stdexcept>
#include <string>

namespace kleinian {

std::vector<std::string> PairLabelling::variables() const {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out.push_back(m <= 10 ? "q_" + std::to_string(i) + std::to_string(j)
                            : "q_" + std::to_string(i) + "," + std::to_string(j));
  return out;
}

int CyclicWeightedLabelling::label(const Cell& c) const {
  const long n = r + 1;
  return static_cast<int>(((c.first + static_cast<long>(a) * c.second) % n + n) % n);
}

namespace {

IntSeries pair_brute(const PairLabelling& lab, int d) {
  IntSeries out = int_series(lab.variables(), d);
  for_each_partition(d, [&](const Partition& p) {
    Exponents e(static_cast<std::size_t>(lab.m * lab.m), 0);
    for (const auto& c : p.cells()) ++e[static_cast<std::size_t>(lab.index(c))];
    out.add_term(e, 1);
  });
  return out;
}

}  // namespace

IntSeries boulet_brute(int d) {
  if (d < 0) throw std::invalid_argument("boulet_brute: negative truncation");
  return pair_brute(PairLabelling{2}, d);
}

IntSeries boulet_product(int d) {
  if (d < 0) throw std::invalid_argument("boulet_product: negative truncation");
  const IntSeries like = int_series(PairLabelling{2}.variables(), d);
  const IntSeries one = IntSeries::constant(like, 1);
  // exponent order q_00, q_01, q_10, q_11
  auto mono = [&](int e00, int e01, int e10, int e11) { return IntSeries::monomial(like, {e00, e01, e10, e11}, 1); };
  IntSeries num = one;
  IntSeries den = one;
  for (int k = 1; 4 * k - 3 <= d; ++k) {
    num = num * (one + mono(k, k - 1, k - 1, k - 1));
    num = num * (one + mono(k, k, k, k - 1));
    den = den * (one - mono(k, k, k, k));
    den = den * (one - mono(k, k, k - 1, k - 1));
    den = den * (one - mono(k, k - 1, k, k - 1));
  }
  return num * inverse(den);
}

IntSeries boulet_specialize(const IntSeries& s) {
  return monomial_map(s, indexed_variables(2), {{1, 0}, {0, 1}, {0, 1}, {1, 0}}, s.truncation());
}

IntSeries glqa_brute(int r, int a, int d) {
  if (r < 1) throw std::invalid_argument("glqa_brute: r must be positive");
  if (d < 0) throw std::invalid_argument("glqa_brute: negative truncation");
  const CyclicWeightedLabelling lab{r, a};
  IntSeries out = int_series(indexed_variables(r + 1), d);
  for_each_partition(d, [&](const Partition& p) {
    Exponents e(static_cast<std::size_t>(r) + 1, 0);
    for (const auto& c : p.cells()) ++e[static_cast<std::size_t>(lab.label(c))];
    out.add_term(e, 1);
  });
  return out;
}

IntSeries zrr_brute(int r, int d) {
  if (r < 0) throw std::invalid_argument("zrr_brute: negative rank");
  if (d < 0) throw std::invalid_argument("zrr_brute: negative truncation");
  return pair_brute(PairLabelling{r + 1}, d);
}

IntSeries zrr_specialize(const IntSeries& s, int r) {
  const int m = r + 1;
  if (s.variables().size() != static_cast<std::size_t>(m * m))
    throw std::invalid_argument("zrr_specialize: variable count mismatch");
  std::vector<Exponents> images;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Exponents e(static_cast<std::size_t>(m), 0);
      e[static_cast<std::size_t>(((i - j) % m + m) % m)] = 1;
      images.push_back(e);
    }
  return monomial_map(s, indexed_variables(m), images, s.truncation());
}

BouletReport verify_boulet(int d, int d2) {
  BouletReport rep;
  rep.truncation = d;
  rep.specialization_truncation = d2;
  const IntSeries brute = boulet_brute(d);
  const IntSeries prod = boulet_product(d);
  rep.product_mismatch = IntSeries::first_difference(brute, prod);
  rep.product_matched = !rep.product_mismatch;
  const IntSeries spec = boulet_specialize(boulet_product(d2));
  rep.specialization_mismatch = IntSeries::first_difference(spec, jacobi_product(d2));
  rep.specialization_matched = !rep.specialization_mismatch;
  return rep;
}

}  // namespace kleinian
