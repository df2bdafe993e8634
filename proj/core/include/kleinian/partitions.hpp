#pragma once

#include <array>
#include <compare>
#include <optional>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kleinian/exact.hpp"
#include "kleinian/series.hpp"

namespace kleinian {

/// A box (a, b) of N x N: a is the column, b the row.
using Cell = std::pair<int, int>;

/// Label of a box in the A_r colouring, (a - b) mod (r + 1).
int cell_label(const Cell& c, int r);

/// Weakly decreasing positive parts. Row b of the diagram has parts[b] boxes.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses "4,2,2,1" (spaces allowed, empty string is the empty partition).
  static Partition parse(const std::string& s);
  /// Partition whose diagram is the given finite down-closed cell set.
  static Partition from_cells(const std::vector<Cell>& cells);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int weight() const;
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  /// parts[b], or 0 beyond the last row.
  [[nodiscard]] int row(int b) const;
  [[nodiscard]] bool contains(const Cell& c) const;
  /// Cells row by row, left to right.
  [[nodiscard]] std::vector<Cell> cells() const;
  [[nodiscard]] Partition conjugate() const;

  [[nodiscard]] std::vector<Cell> removable_cells() const;
  [[nodiscard]] std::vector<Cell> addable_cells() const;
  [[nodiscard]] Partition with_cell(const Cell& c) const;
  [[nodiscard]] Partition without_cell(const Cell& c) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All partitions of weight <= max_weight, by weight and then as partitions_of.
std::vector<Partition> partitions_up_to(int max_weight);
void for_each_partition(int max_weight, const std::function<void(const Partition&)>& f);

std::vector<int> multiweight(const Partition& p, int r);

/// A rim hook, listed in row-major order.
struct BorderStrip {
  std::vector<Cell> cells;
  friend bool operator==(const BorderStrip&, const BorderStrip&) = default;
};

std::vector<BorderStrip> removable_border_strips(const Partition& p, int length);
/// Throws std::invalid_argument if s is not a removable border strip of p.
Partition remove_border_strip(const Partition& p, const BorderStrip& s);
/// Inverse of remove_border_strip; throws if the result is not a partition
/// with s as a removable strip.
Partition add_border_strip(const Partition& p, const BorderStrip& s);

/// m-core obtained by removing m-strips until none is left.
Partition core(const Partition& p, int m);
bool is_core(const Partition& p, int m);
/// Cores reached by all complete m-strip removal sequences.
std::set<Partition> all_cores(const Partition& p, int m);

struct LittlewoodData {
  Partition core;
  std::vector<Partition> quotients;
  friend bool operator==(const LittlewoodData&, const LittlewoodData&) = default;
};

/// Abacus decomposition: charge-zero beta set with a multiple of m beads,
/// quotient j read from the runner of beta numbers congruent to j mod m.
LittlewoodData littlewood_decompose(const Partition& p, int m);
Partition littlewood_compose(const LittlewoodData& d, int m);

/// Gaussian binomial (a+b choose a) in q.
IntPoly q_binomial(int a, int b);
/// Generating function of partitions inside an a x b rectangle, by enumeration.
IntPoly rectangle_partitions(int a, int b);
/// Exact value of q_binomial(a, b) at xi; xi must have multiplicative order a+b+1.
CycInt q_binomial_at_root(int a, int b, const CycInt& xi);
/// The k in {0, 1} with q_binomial(a,b) at zeta_{a+b+1} equal to
/// (-1)^k zeta^(-a(a+1)/2), if the value has that form.
std::optional<int> q_binomial_root_sign(int a, int b);

struct QBinomialRootReport {
  int max_ab = 0;
  std::size_t pairs_checked = 0;
  std::size_t roots_checked = 0;
  /// First rule among k = 0, k = 1, k = a mod 2, k = b mod 2, k = a + b mod 2
  /// consistent with every pair, if any.
  std::optional<std::string> sign_rule;
  bool all_roots_matched = false;
  /// (a, b, root exponent j); j = 0 when the value has no +-xi^(-a(a+1)/2) form.
  std::optional<std::array<int, 3>> witness;

  [[nodiscard]] bool passed() const { return sign_rule.has_value() && all_roots_matched; }
};

/// For 1 <= a, b <= max_ab: determines the sign rule at zeta_{a+b+1}, then
/// checks it at every primitive (a+b+1)-th root.
QBinomialRootReport check_q_binomial_roots(int max_ab);

/// Minimal generators x^a y^b of the monomial ideal whose complement is p.
std::vector<Cell> monomial_ideal_generators(const Partition& p);

struct HilbertComponent {
  Partition core;
  int n = 0;
};
HilbertComponent hilbert_component(const Partition& p, int r);

/// sum over partitions of weight <= d of prod q_i^{wt_i}.
IntSeries brute_force_Zr(int r, int d);
/// Z_0(q)^{r+1} times the A_r lattice sum, q = q_0 ... q_r. An empty grading
/// means total degree.
IntSeries formula_Zr(int r, int d, const std::vector<int>& grading = {});
/// The infinite product form of Z_1 in two variables.
IntSeries jacobi_product(int d);

}  // namespace kleinian
