#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kleinian/patterns.hpp"
#include "kleinian/series.hpp"

namespace kleinian {

/// Position of a cell inside a unit row. Split rows hold an Upper (left of the
/// diagonal) and a Lower (right of the diagonal) half-box.
enum class CellPart { Full, Lower, Upper };

struct WallCell {
  int x = 0;
  int y = 0;
  CellPart part = CellPart::Full;

  friend bool operator==(const WallCell&, const WallCell&) = default;
  friend auto operator<=>(const WallCell&, const WallCell&) = default;
};

/// Partially filled top row of a column.
enum class TopHalf { None, Lower, Upper };

/// Filled part of one column: `rows` complete unit rows plus an optional
/// half-box in row `rows`. The empty column is {0, Lower} (grey cell only).
struct WallColumn {
  int rows = 0;
  TopHalf top = TopHalf::Lower;

  friend bool operator==(const WallColumn&, const WallColumn&) = default;
  friend auto operator<=>(const WallColumn&, const WallColumn&) = default;
};

inline constexpr WallColumn empty_column{0, TopHalf::Lower};

class PatternD {
public:
  explicit PatternD(int r);

  [[nodiscard]] int r() const { return r_; }
  [[nodiscard]] int period() const { return 2 * (r_ - 2); }
  [[nodiscard]] bool split_row(int y) const;
  [[nodiscard]] int label(const WallCell& c) const;
  /// The lower half-box of row 0 in every column.
  [[nodiscard]] static bool grey(const WallCell& c) { return c.y == 0 && c.part == CellPart::Lower; }
  /// The parts present in row y (one Full, or Lower and Upper).
  [[nodiscard]] std::vector<CellPart> parts(int y) const;

  [[nodiscard]] bool valid_state(const WallColumn& s) const;
  /// Cells of column x in state s, grey included, bottom to top.
  [[nodiscard]] std::vector<WallCell> cells(int x, const WallColumn& s) const;
  /// Number of white cells in state s.
  [[nodiscard]] int weight(const WallColumn& s) const;
  /// True when every cell of b is a cell of a.
  [[nodiscard]] static bool contains(const WallColumn& a, const WallColumn& b);
  [[nodiscard]] static bool full(const WallColumn& s) { return s.top == TopHalf::None && s.rows >= 1; }
  /// Smallest state containing both.
  [[nodiscard]] static WallColumn join(const WallColumn& a, const WallColumn& b);
  /// Largest state contained in both.
  [[nodiscard]] static WallColumn meet(const WallColumn& a, const WallColumn& b);
  /// Smallest state containing c.
  [[nodiscard]] static WallColumn state_of(const WallCell& c);
  /// Largest state not containing c.
  [[nodiscard]] static WallColumn state_below(const WallCell& c);

  /// Content of a bar, indexed by label.
  [[nodiscard]] std::vector<int> bar_content() const;

private:
  int r_;
};

/// Columns from left to right; trailing empty columns are not stored.
struct YoungWallD {
  std::vector<WallColumn> columns;

  [[nodiscard]] WallColumn column(int x) const {
    return x < static_cast<int>(columns.size()) ? columns[static_cast<std::size_t>(x)] : empty_column;
  }
  void trim();

  friend bool operator==(const YoungWallD&, const YoungWallD&) = default;
  friend auto operator<=>(const YoungWallD&, const YoungWallD&) = default;
};

struct WallValidation {
  bool valid = true;
  std::string rule;  // "YW1".."YW4", empty when valid
  int column = -1;
};

/// Checks YW1-YW4 on a candidate column list. Columns past the end are empty.
WallValidation validate_wall(const std::vector<WallColumn>& columns, int r);

std::vector<YoungWallD> enumerate_walls(int r, int max_weight);

/// White cells per label; grey cells excluded.
std::vector<int> multiweight_wall(const YoungWallD& w, int r);
int wall_weight(const YoungWallD& w, int r);
/// White cells, left to right and bottom to top.
std::vector<WallCell> wall_cells(const YoungWallD& w, int r);

struct Bar {
  std::vector<WallCell> cells;
  YoungWallD remainder;
};

std::vector<Bar> removable_bars(const YoungWallD& w, int r);
/// Throws std::invalid_argument when `bar` is not removable from w.
YoungWallD remove_bar(const YoungWallD& w, const Bar& bar, int r);
/// Repeatedly removes the first removable bar.
YoungWallD core_wall(const YoungWallD& w, int r);
/// Cores reached by all complete removal sequences.
std::set<YoungWallD> all_cores(const YoungWallD& w, int r);
bool is_core_wall(const YoungWallD& w, int r);

struct WallIdentityReport {
  int r = 0;
  int max_weight = 0;
  std::size_t walls_checked = 0;
  std::size_t bars_checked = 0;
  bool confluent = true;
  /// weight(W) = weight(core) + (2r - 2) * bars, per label.
  bool weight_identity = true;
  /// Each single removal lowers the multiweight by the bar content.
  bool bar_content = true;
  std::string relation;
  std::optional<YoungWallD> witness;

  [[nodiscard]] bool passed() const { return confluent && weight_identity && bar_content; }
};

/// Confluence, weight and bar-content identities on every wall of weight <= max_weight.
WallIdentityReport check_wall_identities(int r, int max_weight);

IntSeries brute_force_ZDr(int r, int d);
/// Euler product^(r+1) in q_0 q_1 q_2^2 ... q_{r-2}^2 q_{r-1} q_r times the
/// D_r lattice sum.
IntSeries formula_ZDr(int r, int d, const std::vector<int>& grading = {});

/// Intersections W cap {cells with label in J} for all walls W, with at most d
/// cells each, as sorted cell lists.
std::vector<std::vector<WallCell>> enumerate_restricted_walls(int r, const std::vector<int>& j, int d);
/// Whether some wall meets the J-cells exactly in `s`.
bool is_restricted_realizable(const std::vector<WallCell>& s, int r, const std::vector<int>& j);

/// Number of graded quotients of sum_{j in J} R^{chi_j} by submodules over
/// F_p, by codimension vector (total at most d). J must be {0} or {0,1}.
/// These are the points of the scalar-torus fixed locus of the Quot scheme.
std::map<Exponents, Integer> graded_quot_point_counts(int r, const std::vector<int>& j, int d, long p);
/// Euler characteristics of the Quot schemes for J = {0} or {0,1}: the point
/// counts above interpolated in p and evaluated at 1. Throws when the counts
/// over the sampled primes are not polynomial.
IntSeries quot_euler_series_D(int r, const std::vector<int>& j, int d);

PhaseMap phase_map_D(int r, const std::vector<int>& j);
SubstitutionReport verify_substitution_D(int r, const std::vector<int>& j, int d);

/// Euler product^(r+1) in prod q_i^{m_i} times the E_r lattice sum.
IntSeries conjectural_ZE(int rank, int d, const std::vector<int>& grading = {});

struct ESubstitution {
  int rank = 0;
  std::vector<int> J;
  int truncation = 0;
  int order = 1;
  std::optional<CycInt> constant;
  CycSeries normalized{{}, 0, CycInt(1, 1)};
  bool nonnegative_integral = false;
  std::optional<Exponents> witness;
};

/// Substitutes conjectural_ZE graded by J-degree and divides by its constant
/// term; checks the quotient has non-negative integer coefficients.
ESubstitution substitute_E(int rank, const std::vector<int>& j, int d);

}  // namespace kleinian
