#pragma once

#include <optional>
#include <vector>

#include "kleinian/partitions.hpp"
#include "kleinian/series.hpp"

namespace kleinian {

/// Box (a, b) labelled by (a mod m | b mod m); variable index m * (a mod m) + (b mod m).
struct PairLabelling {
  int m = 2;

  [[nodiscard]] int index(const Cell& c) const { return m * (c.first % m) + c.second % m; }
  [[nodiscard]] std::vector<std::string> variables() const;
};

/// Box (i, j) labelled by (i + a j) mod (r + 1).
struct CyclicWeightedLabelling {
  int r = 1;
  int a = 1;

  [[nodiscard]] int label(const Cell& c) const;
  /// 1 < a < r - 2.
  [[nodiscard]] bool in_stated_range() const { return 1 < a && a < r - 2; }
};

/// Sum over partitions of weight <= d of prod q_ij^{wt_ij}, variables q_00, q_01, q_10, q_11.
IntSeries boulet_brute(int d);
/// The four-parameter infinite product, same variables.
IntSeries boulet_product(int d);
/// q_00, q_11 -> q_0 and q_01, q_10 -> q_1.
IntSeries boulet_specialize(const IntSeries& s);

IntSeries glqa_brute(int r, int a, int d);

/// (r+1)^2 variables q_ij in row-major order.
IntSeries zrr_brute(int r, int d);
/// q_ij -> q_{(i - j) mod (r+1)}.
IntSeries zrr_specialize(const IntSeries& s, int r);

struct BouletReport {
  int truncation = 0;
  bool product_matched = false;
  std::optional<Exponents> product_mismatch;
  int specialization_truncation = 0;
  bool specialization_matched = false;
  std::optional<Exponents> specialization_mismatch;

  [[nodiscard]] bool passed() const { return product_matched && specialization_matched; }
};

/// Brute force against the product to degree d, and the product after specialization
/// against jacobi_product to degree d2.
BouletReport verify_boulet(int d, int d2);

}  // namespace kleinian
