#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kleinian/partitions.hpp"
#include "kleinian/series.hpp"

namespace kleinian {

/// The boxes of N x N whose A_r label lies in J.
struct PatternAJ {
  int r;
  std::vector<int> J;

  PatternAJ(int r, const std::vector<int>& j);

  [[nodiscard]] bool in_pattern(const Cell& c) const;
  [[nodiscard]] bool label_in_j(int label) const;
  /// Number of pattern boxes (x, b) with x < column.
  [[nodiscard]] int count_before(int b, int column) const;
  /// Column of the k-th (0-based) pattern box of row b.
  [[nodiscard]] int column_of(int b, int k) const;
  /// Variables q_j, j in J.
  [[nodiscard]] std::vector<std::string> j_variables() const;
};

/// A finite set of pattern boxes, stored as the number of pattern boxes in
/// each row. Realizable diagrams are row-wise prefixes, so this is faithful
/// for them.
struct TruncatedDiagram {
  std::vector<int> rows;

  [[nodiscard]] int row(int b) const { return b < static_cast<int>(rows.size()) ? rows[static_cast<std::size_t>(b)] : 0; }
  [[nodiscard]] int weight() const;
  [[nodiscard]] std::vector<Cell> cells(const PatternAJ& p) const;
  /// Label counts, indexed by all of I (zero outside J).
  [[nodiscard]] std::vector<int> multiweight(const PatternAJ& p) const;

  friend bool operator==(const TruncatedDiagram&, const TruncatedDiagram&) = default;
  friend auto operator<=>(const TruncatedDiagram&, const TruncatedDiagram&) = default;
};

TruncatedDiagram project(const Partition& lambda, const PatternAJ& p);
/// Smallest partition projecting to nu; throws std::invalid_argument when nu
/// is not the projection of any partition.
Partition minimal_lift(const TruncatedDiagram& nu, const PatternAJ& p);
/// Largest partition projecting to nu.
Partition maximal_lift(const TruncatedDiagram& nu, const PatternAJ& p);
bool is_realizable(const TruncatedDiagram& nu, const PatternAJ& p);

/// Every realizable diagram with at most max_weight boxes, ordered by weight
/// and then by row counts.
std::vector<TruncatedDiagram> enumerate_truncated(const PatternAJ& p, int max_weight);
/// The same set computed as projections of all partitions up to the weight
/// bound w (r+1) + (r+1)^2.
std::vector<TruncatedDiagram> enumerate_truncated_by_projection(const PatternAJ& p, int max_weight);

/// A connected component of maximal_lift \ minimal_lift.
struct FiberGap {
  std::vector<Cell> cells;
  int x0 = 0, y0 = 0, width = 0, height = 0;
  [[nodiscard]] bool is_rectangle() const {
    return static_cast<int>(cells.size()) == width * height;
  }
};

std::vector<FiberGap> fiber_gaps(const TruncatedDiagram& nu, const PatternAJ& p);

/// Sum over the fiber of prod_i q_i^{wt_i}, as monomial(minimal lift) times
/// one factor per gap; variables q_0..q_r shaped like `like`.
IntSeries fiber_series(const TruncatedDiagram& nu, const PatternAJ& p, const IntSeries& like);
/// The same sum by enumerating the partition interval directly.
IntSeries fiber_series_brute(const TruncatedDiagram& nu, const PatternAJ& p, const IntSeries& like);
/// Labelled generating function of the down-closed subsets of one gap.
IntSeries gap_series(const FiberGap& g, int r, const IntSeries& like);

/// sum over Part[r,J] of prod_{j in J} q_j^{wt_j}, total degree <= d.
IntSeries brute_force_ZrJ(const PatternAJ& p, int d);

/// i not in J: 1/(2 + r_i); i in J: 1/(2 + r_{i-1}) + 1/(2 + r_{i+1}),
/// r_i the size of the component of i in I \ J (0 on J).
std::vector<Rational> phases_A(int r, const std::vector<int>& j);
PhaseMap phase_map_A(int r, const std::vector<int>& j);

enum class PhaseConvention { Positive, Arrows };
std::string to_string(PhaseConvention c);

struct SubstitutionReport {
  std::string type;
  int r = 0;
  std::vector<int> J;
  int truncation = 0;
  int order = 1;
  std::string convention;
  std::optional<CycInt> c;
  std::optional<int> c_order;
  bool matched = false;
  std::optional<Exponents> first_mismatch;
  std::optional<CycInt> lhs_coefficient;
  std::optional<CycInt> rhs_coefficient;
  /// Extra route: fiberwise substitution, when it was run.
  std::optional<bool> fibers_matched;
  std::size_t diagrams = 0;

  [[nodiscard]] bool passed() const {
    return matched && c_order.has_value() && fibers_matched.value_or(true);
  }
};

/// Compares Z_{r,J} (enumerated) with c * s_{r,J}(Z_r), s applied to the
/// closed form of Z_r graded by J-degree. With `fibers` set, also checks
/// that each fiber substitutes to c times its J-monomial.
SubstitutionReport verify_substitution_A(int r, const std::vector<int>& j, int d,
                                         PhaseConvention convention = PhaseConvention::Positive,
                                         bool fibers = true);

/// Fills c, matched and the witness from the two sides.
void compare_sides(SubstitutionReport& report, const CycSeries& lhs, const CycSeries& rhs);

}  // namespace kleinian
