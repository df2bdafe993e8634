#include "kleinian/youngwalls.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "kleinian/cartan.hpp"
#include "kleinian/parallel.hpp"

namespace kleinian {

PatternD::PatternD(int r) : r_(r) {
  if (r < 4) throw std::invalid_argument("PatternD: rank must be at least 4");
}

bool PatternD::split_row(int y) const {
  const int t = y % period();
  return t == 0 || t == r_ - 2;
}

int PatternD::label(const WallCell& c) const {
  const int t = c.y % period();
  const bool even = c.x % 2 == 0;
  if (t == 0) {
    if (c.part == CellPart::Full) throw std::invalid_argument("PatternD: full box in a split row");
    return (c.part == CellPart::Upper) == even ? 0 : 1;
  }
  if (t == r_ - 2) {
    if (c.part == CellPart::Full) throw std::invalid_argument("PatternD: full box in a split row");
    return (c.part == CellPart::Upper) == even ? r_ - 1 : r_;
  }
  if (c.part != CellPart::Full) throw std::invalid_argument("PatternD: half-box in a full row");
  return t < r_ - 2 ? t + 1 : 2 * r_ - 3 - t;
}

std::vector<CellPart> PatternD::parts(int y) const {
  if (split_row(y)) return {CellPart::Lower, CellPart::Upper};
  return {CellPart::Full};
}

bool PatternD::valid_state(const WallColumn& s) const {
  if (s.rows < 0) return false;
  if (s.rows == 0 && s.top != TopHalf::Lower) return false;
  return s.top == TopHalf::None || split_row(s.rows);
}

std::vector<WallCell> PatternD::cells(int x, const WallColumn& s) const {
  std::vector<WallCell> out;
  for (int y = 0; y < s.rows; ++y)
    for (CellPart p : parts(y)) out.push_back({x, y, p});
  if (s.top == TopHalf::Lower) out.push_back({x, s.rows, CellPart::Lower});
  if (s.top == TopHalf::Upper) out.push_back({x, s.rows, CellPart::Upper});
  return out;
}

int PatternD::weight(const WallColumn& s) const {
  int n = s.top == TopHalf::None ? 0 : 1;
  for (int y = 0; y < s.rows; ++y) n += split_row(y) ? 2 : 1;
  return n - 1;
}

bool PatternD::contains(const WallColumn& a, const WallColumn& b) {
  if (b.rows < a.rows) return true;
  if (b.rows > a.rows) return false;
  return b.top == TopHalf::None || b.top == a.top;
}

WallColumn PatternD::join(const WallColumn& a, const WallColumn& b) {
  if (contains(a, b)) return a;
  if (contains(b, a)) return b;
  return {a.rows + 1, TopHalf::None};
}

WallColumn PatternD::meet(const WallColumn& a, const WallColumn& b) {
  if (contains(a, b)) return b;
  if (contains(b, a)) return a;
  return {a.rows, TopHalf::None};
}

WallColumn PatternD::state_of(const WallCell& c) {
  switch (c.part) {
    case CellPart::Full: return {c.y + 1, TopHalf::None};
    case CellPart::Lower: return {c.y, TopHalf::Lower};
    case CellPart::Upper: return {c.y, TopHalf::Upper};
  }
  return {};
}

WallColumn PatternD::state_below(const WallCell& c) {
  switch (c.part) {
    case CellPart::Full: return {c.y, TopHalf::None};
    case CellPart::Lower: return {c.y, TopHalf::Upper};
    case CellPart::Upper: return {c.y, TopHalf::Lower};
  }
  return {};
}

std::vector<int> PatternD::bar_content() const {
  std::vector<int> c(static_cast<std::size_t>(r_) + 1, 2);
  c[0] = c[1] = c[static_cast<std::size_t>(r_) - 1] = c[static_cast<std::size_t>(r_)] = 1;
  return c;
}

void YoungWallD::trim() {
  while (!columns.empty() && columns.back() == empty_column) columns.pop_back();
}

WallValidation validate_wall(const std::vector<WallColumn>& columns, int r) {
  const PatternD p(r);
  const int n = static_cast<int>(columns.size());
  auto at = [&](int x) { return columns[static_cast<std::size_t>(x)]; };
  for (int x = 0; x < n; ++x)
    if (at(x).rows < 0 || (at(x).rows == 0 && at(x).top != TopHalf::Lower)) return {false, "YW1", x};
  for (int x = 0; x < n; ++x)
    if (!p.valid_state(at(x))) return {false, "YW2", x};
  for (int x = 1; x < n; ++x)
    if (!PatternD::contains(at(x - 1), at(x))) return {false, "YW3", x};
  for (int x = 0; x < n; ++x) {
    if (!PatternD::full(at(x))) continue;
    for (int y = 0; y < x; ++y)
      if (PatternD::full(at(y)) && at(y).rows == at(x).rows) return {false, "YW4", x};
  }
  return {};
}

namespace {

// Valid column states with at most max_weight white cells, by weight.
std::vector<WallColumn> states_up_to(const PatternD& p, int max_weight) {
  std::vector<WallColumn> out;
  for (int rows = 0;; ++rows) {
    bool any = false;
    for (TopHalf t : {TopHalf::None, TopHalf::Lower, TopHalf::Upper}) {
      WallColumn s{rows, t};
      if (!p.valid_state(s) || p.weight(s) > max_weight) continue;
      out.push_back(s);
      any = true;
    }
    if (!any && rows > 0 && p.weight({rows, TopHalf::None}) > max_weight) break;
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](const WallColumn& a, const WallColumn& b) { return p.weight(a) < p.weight(b); });
  return out;
}

bool wall_order(const PatternD& p, const YoungWallD& a, const YoungWallD& b) {
  int wa = 0, wb = 0;
  for (const auto& s : a.columns) wa += p.weight(s);
  for (const auto& s : b.columns) wb += p.weight(s);
  if (wa != wb) return wa < wb;
  return a < b;
}

}  // namespace

std::vector<YoungWallD> enumerate_walls(int r, int max_weight) {
  const PatternD p(r);
  if (max_weight < 0) return {};
  const auto states = states_up_to(p, max_weight);
  auto shard = [&](std::size_t first) {
    std::vector<YoungWallD> out;
    YoungWallD w;
    std::function<void(int)> extend = [&](int budget) {
      const WallColumn prev = w.columns.back();
      if (prev == empty_column) {
        YoungWallD done = w;
        done.trim();
        out.push_back(std::move(done));
        return;
      }
      for (const auto& s : states) {
        if (p.weight(s) > budget) break;
        if (!PatternD::contains(prev, s)) continue;
        if (PatternD::full(s) && s == prev) continue;
        w.columns.push_back(s);
        extend(budget - p.weight(s));
        w.columns.pop_back();
      }
    };
    w.columns.push_back(states[first]);
    extend(max_weight - p.weight(states[first]));
    return out;
  };
  auto parts = parallel_map(states.size(), shard);
  std::vector<YoungWallD> all;
  for (auto& part : parts)
    for (auto& w : part) all.push_back(std::move(w));
  std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) { return wall_order(p, a, b); });
  return all;
}

std::vector<WallCell> wall_cells(const YoungWallD& w, int r) {
  const PatternD p(r);
  std::vector<WallCell> out;
  for (int x = 0; x < static_cast<int>(w.columns.size()); ++x)
    for (const auto& c : p.cells(x, w.column(x)))
      if (!PatternD::grey(c)) out.push_back(c);
  return out;
}

std::vector<int> multiweight_wall(const YoungWallD& w, int r) {
  const PatternD p(r);
  std::vector<int> m(static_cast<std::size_t>(r) + 1, 0);
  for (const auto& c : wall_cells(w, r)) ++m[static_cast<std::size_t>(p.label(c))];
  return m;
}

int wall_weight(const YoungWallD& w, int r) {
  const PatternD p(r);
  int n = 0;
  for (const auto& s : w.columns) n += p.weight(s);
  return n;
}

namespace {

// Removed cells are top segments of their columns; the set is connected
// when those columns are consecutive.
bool column_run(const std::vector<WallCell>& cells) {
  std::set<int> xs;
  for (const auto& c : cells) xs.insert(c.x);
  return *xs.rbegin() - *xs.begin() + 1 == static_cast<int>(xs.size());
}

}  // namespace

std::vector<Bar> removable_bars(const YoungWallD& w, int r) {
  const PatternD p(r);
  const int size = 2 * r - 2;
  const auto content = p.bar_content();
  const int n = static_cast<int>(w.columns.size());
  std::vector<Bar> out;
  std::vector<WallColumn> sub(static_cast<std::size_t>(n));

  auto record = [&] {
    YoungWallD rest{sub};
    rest.trim();
    std::vector<WallCell> removed;
    std::vector<int> labels(content.size(), 0);
    for (int x = 0; x < n; ++x) {
      const auto kept = p.cells(x, sub[static_cast<std::size_t>(x)]);
      for (const auto& c : p.cells(x, w.column(x))) {
        if (std::find(kept.begin(), kept.end(), c) != kept.end()) continue;
        removed.push_back(c);
        ++labels[static_cast<std::size_t>(p.label(c))];
      }
    }
    if (labels == content && column_run(removed)) out.push_back({std::move(removed), std::move(rest)});
  };

  std::function<void(int, int)> go = [&](int x, int budget) {
    if (x == n) {
      if (budget == 0) record();
      return;
    }
    const WallColumn s = w.column(x);
    for (int rows = s.rows; rows >= 0; --rows) {
      bool any = false;
      for (TopHalf t : {TopHalf::Upper, TopHalf::Lower, TopHalf::None}) {
        const WallColumn c{rows, t};
        if (!p.valid_state(c) || !PatternD::contains(s, c)) continue;
        const int removed = p.weight(s) - p.weight(c);
        if (removed > budget) continue;
        any = true;
        if (x > 0) {
          const WallColumn prev = sub[static_cast<std::size_t>(x) - 1];
          if (!PatternD::contains(prev, c)) continue;
          if (PatternD::full(c) && c == prev) continue;
        }
        sub[static_cast<std::size_t>(x)] = c;
        go(x + 1, budget - removed);
      }
      if (!any && rows < s.rows) break;
    }
  };
  go(0, size);
  return out;
}

YoungWallD remove_bar(const YoungWallD& w, const Bar& bar, int r) {
  auto want = bar.cells;
  std::sort(want.begin(), want.end());
  for (auto& b : removable_bars(w, r)) {
    auto got = b.cells;
    std::sort(got.begin(), got.end());
    if (got == want) return b.remainder;
  }
  throw std::invalid_argument("remove_bar: bar is not removable from this wall");
}

YoungWallD core_wall(const YoungWallD& w, int r) {
  YoungWallD cur = w;
  cur.trim();
  for (;;) {
    auto bars = removable_bars(cur, r);
    if (bars.empty()) return cur;
    cur = bars.front().remainder;
  }
}

bool is_core_wall(const YoungWallD& w, int r) { return removable_bars(w, r).empty(); }

std::set<YoungWallD> all_cores(const YoungWallD& w, int r) {
  std::map<YoungWallD, std::set<YoungWallD>> memo;
  std::function<const std::set<YoungWallD>&(const YoungWallD&)> go =
      [&](const YoungWallD& v) -> const std::set<YoungWallD>& {
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    std::set<YoungWallD> result;
    auto bars = removable_bars(v, r);
    if (bars.empty()) result.insert(v);
    for (const auto& b : bars) {
      const auto& sub = go(b.remainder);
      result.insert(sub.begin(), sub.end());
    }
    return memo.emplace(v, std::move(result)).first->second;
  };
  YoungWallD start = w;
  start.trim();
  return go(start);
}

WallIdentityReport check_wall_identities(int r, int max_weight) {
  const PatternD pat(r);
  const auto content = pat.bar_content();
  const int h = 2 * r - 2;
  WallIdentityReport rep;
  rep.r = r;
  rep.max_weight = max_weight;
  const auto walls = enumerate_walls(r, max_weight);
  rep.walls_checked = walls.size();
  struct Result {
    std::string relation;
    std::size_t bars = 0;
  };
  const auto results = parallel_map(walls.size(), [&](std::size_t i) {
    Result res;
    const auto& w = walls[i];
    const auto cores = all_cores(w, r);
    if (cores.size() != 1) {
      res.relation = "confluence";
      return res;
    }
    const auto mw = multiweight_wall(w, r);
    const auto mc = multiweight_wall(*cores.begin(), r);
    const int diff = wall_weight(w, r) - wall_weight(*cores.begin(), r);
    bool ok = diff % h == 0;
    for (std::size_t l = 0; ok && l < mw.size(); ++l) ok = mw[l] - mc[l] == diff / h * content[l];
    if (!ok) {
      res.relation = "weight";
      return res;
    }
    for (const auto& bar : removable_bars(w, r)) {
      ++res.bars;
      const auto mr = multiweight_wall(bar.remainder, r);
      for (std::size_t l = 0; l < mw.size(); ++l)
        if (mw[l] - mr[l] != content[l]) {
          res.relation = "bar content";
          return res;
        }
    }
    return res;
  });
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const auto& res = results[i];
    rep.bars_checked += res.bars;
    if (res.relation.empty()) continue;
    if (res.relation == "confluence") rep.confluent = false;
    if (res.relation == "weight") rep.weight_identity = false;
    if (res.relation == "bar content") rep.bar_content = false;
    if (!rep.witness) {
      rep.witness = walls[i];
      rep.relation = res.relation;
    }
  }
  return rep;
}

IntSeries brute_force_ZDr(int r, int d) {
  const IntSeries like = int_series(indexed_variables(r + 1), d);
  IntSeries out = like;
  for (const auto& w : enumerate_walls(r, d)) {
    const auto m = multiweight_wall(w, r);
    out.add_term(Exponents(m.begin(), m.end()), 1);
  }
  return out;
}

IntSeries formula_ZDr(int r, int d, const std::vector<int>& grading) {
  if (r < 4) throw std::invalid_argument("formula_ZDr: rank must be at least 4");
  const IntSeries like = int_series(indexed_variables(r + 1), d, grading);
  const auto marks = affine_diagram(Family::D, r).marks;
  const Exponents q(marks.begin(), marks.end());
  return euler_product(like, q, r + 1) * lattice_theta(cartan_matrix(Family::D, r), marks, like);
}

namespace {

struct Restriction {
  const PatternD& p;
  std::vector<bool> in_j;

  [[nodiscard]] bool j_cell(const WallCell& c) const {
    return !PatternD::grey(c) && in_j[static_cast<std::size_t>(p.label(c))];
  }

  // Lowest J-cells of column x that are missing from s; empty only if the
  // search bound is reached.
  [[nodiscard]] std::vector<WallCell> first_missing(const std::set<WallCell>& s, int x, int max_y) const {
    for (int y = 0; y <= max_y; ++y) {
      std::vector<WallCell> row;
      for (CellPart part : p.parts(y)) {
        const WallCell c{x, y, part};
        if (j_cell(c) && !s.contains(c)) row.push_back(c);
      }
      if (!row.empty()) return row;
    }
    return {};
  }

  // All J-cells strictly below c in the wall order are in s.
  [[nodiscard]] bool predecessors_present(const std::set<WallCell>& s, const WallCell& c) const {
    for (int x = 0; x <= c.x; ++x) {
      for (int y = 0; y < c.y; ++y)
        for (CellPart part : p.parts(y)) {
          const WallCell q{x, y, part};
          if (j_cell(q) && !s.contains(q)) return false;
        }
      if (x < c.x) {
        const WallCell q{x, c.y, c.part};
        if (j_cell(q) && !s.contains(q)) return false;
      }
    }
    return true;
  }
};

std::vector<bool> label_mask(int r, const std::vector<int>& j) {
  std::vector<bool> m(static_cast<std::size_t>(r) + 1, false);
  for (int v : normalize_labels(j, r)) m[static_cast<std::size_t>(v)] = true;
  return m;
}

}  // namespace

bool is_restricted_realizable(const std::vector<WallCell>& cells, int r, const std::vector<int>& j) {
  const PatternD p(r);
  const Restriction res{p, label_mask(r, j)};
  const std::set<WallCell> s(cells.begin(), cells.end());
  for (const auto& c : s)
    if (c.x < 0 || c.y < 0 || !res.j_cell(c)) return false;
  if (s.empty()) return true;
  int max_x = 0, max_y = 0;
  for (const auto& c : s) {
    max_x = std::max(max_x, c.x);
    max_y = std::max(max_y, c.y);
  }
  const int search = max_y + 2 * p.period() + 1;
  std::vector<WallColumn> lower(static_cast<std::size_t>(max_x) + 1, empty_column);
  for (const auto& c : s)
    for (int x = 0; x <= c.x; ++x) {
      auto& l = lower[static_cast<std::size_t>(x)];
      l = PatternD::join(l, PatternD::state_of(c));
    }
  std::vector<WallColumn> upper(static_cast<std::size_t>(max_x) + 1);
  std::optional<WallColumn> bound;
  for (int x = 0; x <= max_x; ++x) {
    for (const auto& m : res.first_missing(s, x, search)) {
      const WallColumn b = PatternD::state_below(m);
      bound = bound ? PatternD::meet(*bound, b) : b;
    }
    if (!bound) throw std::logic_error("restricted wall: no missing J-cell found");
    upper[static_cast<std::size_t>(x)] = *bound;
  }

  std::set<WallColumn> reach;
  for (int x = 0; x <= max_x; ++x) {
    const auto lo = lower[static_cast<std::size_t>(x)];
    const auto hi = upper[static_cast<std::size_t>(x)];
    if (!PatternD::contains(hi, lo)) return false;
    std::vector<WallColumn> cand;
    for (int rows = lo.rows; rows <= hi.rows; ++rows)
      for (TopHalf t : {TopHalf::None, TopHalf::Lower, TopHalf::Upper}) {
        const WallColumn c{rows, t};
        if (p.valid_state(c) && PatternD::contains(hi, c) && PatternD::contains(c, lo)) cand.push_back(c);
      }
    std::set<WallColumn> next;
    for (const auto& c : cand) {
      if (x == 0) {
        next.insert(c);
        continue;
      }
      for (const auto& prev : reach)
        if (PatternD::contains(prev, c) && !(PatternD::full(c) && c == prev)) {
          next.insert(c);
          break;
        }
    }
    if (next.empty()) return false;
    reach = std::move(next);
  }
  return true;
}

std::vector<std::vector<WallCell>> enumerate_restricted_walls(int r, const std::vector<int>& j, int d) {
  const PatternD p(r);
  const Restriction res{p, label_mask(r, j)};
  std::set<std::set<WallCell>> level{{}};
  std::vector<std::vector<WallCell>> out;
  for (int k = 0; k <= d; ++k) {
    std::vector<std::set<WallCell>> current(level.begin(), level.end());
    auto keep = parallel_map(current.size(), [&](std::size_t i) {
      return is_restricted_realizable({current[i].begin(), current[i].end()}, r, j);
    });
    for (std::size_t i = 0; i < current.size(); ++i)
      if (keep[i]) out.emplace_back(current[i].begin(), current[i].end());
    if (k == d) break;
    std::set<std::set<WallCell>> next;
    for (const auto& s : current) {
      int max_x = -1, max_y = 0;
      for (const auto& c : s) {
        max_x = std::max(max_x, c.x);
        max_y = std::max(max_y, c.y);
      }
      const int search = max_y + 2 * p.period() + 1;
      for (int x = 0; x <= max_x + 2; ++x)
        for (const auto& c : res.first_missing(s, x, search)) {
          if (!res.predecessors_present(s, c)) continue;
          auto t = s;
          t.insert(c);
          next.insert(std::move(t));
        }
    }
    level = std::move(next);
  }
  return out;
}

PhaseMap phase_map_D(int r, const std::vector<int>& j) {
  const auto labels = normalize_labels(j, r);
  return make_phase_map(indexed_variables(r + 1), labels,
                        substitution_phases(affine_diagram(Family::D, r), labels));
}

SubstitutionReport verify_substitution_D(int r, const std::vector<int>& j, int d) {
  if (d < 0) throw std::invalid_argument("verify_substitution_D: negative truncation");
  if (r < 4) throw std::invalid_argument("verify_substitution_D: rank must be at least 4");
  const auto labels = normalize_labels(j, r);
  const PhaseMap map = phase_map_D(r, labels);
  SubstitutionReport report;
  report.type = "D";
  report.r = r;
  report.J = labels;
  report.truncation = d;
  report.order = map.order();
  report.convention = to_string(PhaseConvention::Arrows);

  IntSeries zj = labels.size() == static_cast<std::size_t>(r) + 1 ? brute_force_ZDr(r, d)
                                                                : quot_euler_series_D(r, labels, d);
  report.diagrams = zj.size();
  const CycSeries lhs = embed(zj, report.order);

  std::vector<int> grading(static_cast<std::size_t>(r) + 1, 0);
  for (int v : labels) grading[static_cast<std::size_t>(v)] = 1;
  const CycSeries rhs = substitute(formula_ZDr(r, d, grading), map, report.order);
  compare_sides(report, lhs, rhs);
  return report;
}

IntSeries conjectural_ZE(int rank, int d, const std::vector<int>& grading) {
  if (rank < 6 || rank > 8) throw std::invalid_argument("conjectural_ZE: rank must be 6, 7 or 8");
  const IntSeries like = int_series(indexed_variables(rank + 1), d, grading);
  const auto marks = affine_diagram(Family::E, rank).marks;
  const Exponents q(marks.begin(), marks.end());
  return euler_product(like, q, rank + 1) * lattice_theta(cartan_matrix(Family::E, rank), marks, like);
}

ESubstitution substitute_E(int rank, const std::vector<int>& j, int d) {
  if (d < 0) throw std::invalid_argument("substitute_E: negative truncation");
  const auto diagram = affine_diagram(Family::E, rank);
  const auto labels = normalize_labels(j, rank);
  const PhaseMap map = make_phase_map(indexed_variables(rank + 1), labels, substitution_phases(diagram, labels));
  ESubstitution out;
  out.rank = rank;
  out.J = labels;
  out.truncation = d;
  out.order = map.order();
  std::vector<int> grading(static_cast<std::size_t>(rank) + 1, 0);
  for (int v : labels) grading[static_cast<std::size_t>(v)] = 1;
  const CycSeries s = substitute(conjectural_ZE(rank, d, grading), map, out.order);
  const CycSeries one = CycSeries::constant(s, CycInt(out.order, 1));
  const auto ratio = divide_expect_constant(s.truncated(0), one.truncated(0));
  if (!ratio.constant || ratio.constant->is_zero()) {
    out.normalized = s;
    out.witness = Exponents(labels.size(), 0);
    return out;
  }
  out.constant = ratio.constant;
  // Divide every coefficient by the constant term.
  CycSeries normalized(s.variables(), s.truncation(), s.one(), s.grading());
  out.nonnegative_integral = true;
  for (const auto& [e, c] : s.terms()) {
    const auto q = divide_exact(c, *out.constant);
    std::optional<Integer> n;
    if (q) n = q->to_integer();
    if (!n || *n < 0) {
      if (out.nonnegative_integral) out.witness = e;
      out.nonnegative_integral = false;
    }
    normalized.add_term(e, q ? *q : c);
  }
  out.normalized = normalized;
  return out;
}

}  // namespace kleinian
