#include "kleinian/patterns.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kleinian/cartan.hpp"

namespace kleinian {

PatternAJ::PatternAJ(int rank, const std::vector<int>& j) : r(rank), J(normalize_labels(j, rank)) {
  if (rank < 0) throw std::invalid_argument("pattern: negative rank");
}

bool PatternAJ::label_in_j(int label) const { return std::binary_search(J.begin(), J.end(), label); }

bool PatternAJ::in_pattern(const Cell& c) const { return label_in_j(cell_label(c, r)); }

int PatternAJ::count_before(int b, int column) const {
  const int m = r + 1;
  const int full = column / m;
  int n = full * static_cast<int>(J.size());
  for (int x = full * m; x < column; ++x)
    if (in_pattern({x, b})) ++n;
  return n;
}

int PatternAJ::column_of(int b, int k) const {
  const int m = r + 1;
  std::vector<int> offsets;
  for (int j : J) offsets.push_back(((b + j) % m + m) % m);
  std::sort(offsets.begin(), offsets.end());
  const int per = static_cast<int>(offsets.size());
  return (k / per) * m + offsets[static_cast<std::size_t>(k % per)];
}

std::vector<std::string> PatternAJ::j_variables() const {
  std::vector<std::string> out;
  for (int j : J) out.push_back("q_" + std::to_string(j));
  return out;
}

int TruncatedDiagram::weight() const {
  int w = 0;
  for (int k : rows) w += k;
  return w;
}

std::vector<Cell> TruncatedDiagram::cells(const PatternAJ& p) const {
  std::vector<Cell> out;
  for (int b = 0; b < static_cast<int>(rows.size()); ++b)
    for (int k = 0; k < rows[static_cast<std::size_t>(b)]; ++k) out.emplace_back(p.column_of(b, k), b);
  return out;
}

std::vector<int> TruncatedDiagram::multiweight(const PatternAJ& p) const {
  std::vector<int> w(static_cast<std::size_t>(p.r) + 1, 0);
  for (const Cell& c : cells(p)) ++w[static_cast<std::size_t>(cell_label(c, p.r))];
  return w;
}

namespace {

void trim(std::vector<int>& rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
}

std::vector<int> j_exponents(const std::vector<int>& full, const PatternAJ& p) {
  std::vector<int> e;
  for (int j : p.J) e.push_back(full[static_cast<std::size_t>(j)]);
  return e;
}

bool diagram_less(const TruncatedDiagram& a, const TruncatedDiagram& b) {
  const int wa = a.weight(), wb = b.weight();
  return wa != wb ? wa < wb : a.rows < b.rows;
}

}  // namespace

TruncatedDiagram project(const Partition& lambda, const PatternAJ& p) {
  TruncatedDiagram d;
  for (int b = 0; b < lambda.length(); ++b) d.rows.push_back(p.count_before(b, lambda.row(b)));
  trim(d.rows);
  return d;
}

Partition minimal_lift(const TruncatedDiagram& nu, const PatternAJ& p) {
  std::vector<int> parts(nu.rows.size(), 0);
  int above = 0;
  for (int b = static_cast<int>(nu.rows.size()) - 1; b >= 0; --b) {
    const int k = nu.rows[static_cast<std::size_t>(b)];
    if (k < 0) throw std::invalid_argument("truncated diagram: negative row count");
    const int last = k > 0 ? p.column_of(b, k - 1) + 1 : 0;
    above = std::max(above, last);
    parts[static_cast<std::size_t>(b)] = above;
  }
  Partition lift(parts);
  TruncatedDiagram normal = nu;
  trim(normal.rows);
  if (!(project(lift, p) == normal)) throw std::invalid_argument("truncated diagram is not realizable");
  return lift;
}

Partition maximal_lift(const TruncatedDiagram& nu, const PatternAJ& p) {
  std::vector<int> parts;
  int bound = -1;
  for (int b = 0;; ++b) {
    const int first_missing = p.column_of(b, nu.row(b));
    bound = bound < 0 ? first_missing : std::min(bound, first_missing);
    if (bound == 0) break;
    parts.push_back(bound);
  }
  return Partition(parts);
}

bool is_realizable(const TruncatedDiagram& nu, const PatternAJ& p) {
  try {
    minimal_lift(nu, p);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<TruncatedDiagram> enumerate_truncated(const PatternAJ& p, int max_weight) {
  std::vector<TruncatedDiagram> out;
  if (max_weight < 0) return out;
  std::set<std::vector<int>> level{{}};
  for (int w = 0;; ++w) {
    for (const auto& rows : level) out.push_back({rows});
    if (w == max_weight) break;
    std::set<std::vector<int>> next;
    for (const auto& rows : level) {
      const TruncatedDiagram s{rows};
      const int top = static_cast<int>(rows.size()) + p.r + 2;
      for (int b = 0; b <= top; ++b) {
        const int col = p.column_of(b, s.row(b));
        bool addable = true;
        for (int below = 0; below < b && addable; ++below)
          if (s.row(below) < p.count_before(below, col + 1)) addable = false;
        if (!addable) continue;
        auto grown = rows;
        if (static_cast<int>(grown.size()) <= b) grown.resize(static_cast<std::size_t>(b) + 1, 0);
        ++grown[static_cast<std::size_t>(b)];
        next.insert(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<TruncatedDiagram> enumerate_truncated_by_projection(const PatternAJ& p, int max_weight) {
  const int m = p.r + 1;
  std::set<std::vector<int>> seen;
  std::vector<TruncatedDiagram> out;
  for_each_partition(max_weight * m + m * m, [&](const Partition& lambda) {
    auto d = project(lambda, p);
    if (d.weight() <= max_weight && seen.insert(d.rows).second) out.push_back(d);
  });
  std::sort(out.begin(), out.end(), diagram_less);
  return out;
}

std::vector<FiberGap> fiber_gaps(const TruncatedDiagram& nu, const PatternAJ& p) {
  const Partition lo = minimal_lift(nu, p);
  const Partition hi = maximal_lift(nu, p);
  std::set<Cell> open;
  for (const Cell& c : hi.cells())
    if (!lo.contains(c)) open.insert(c);
  std::vector<FiberGap> out;
  while (!open.empty()) {
    FiberGap g;
    std::vector<Cell> stack{*open.begin()};
    open.erase(open.begin());
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      g.cells.push_back(c);
      auto [a, b] = c;
      for (Cell n : {Cell{a + 1, b}, Cell{a - 1, b}, Cell{a, b + 1}, Cell{a, b - 1}}) {
        auto it = open.find(n);
        if (it == open.end()) continue;
        open.erase(it);
        stack.push_back(n);
      }
    }
    std::sort(g.cells.begin(), g.cells.end(), [](const Cell& x, const Cell& y) {
      return x.second != y.second ? x.second < y.second : x.first < y.first;
    });
    int x1 = 0, y1 = 0;
    g.x0 = g.cells.front().first;
    g.y0 = g.cells.front().second;
    for (auto [a, b] : g.cells) {
      g.x0 = std::min(g.x0, a);
      g.y0 = std::min(g.y0, b);
      x1 = std::max(x1, a + 1);
      y1 = std::max(y1, b + 1);
    }
    g.width = x1 - g.x0;
    g.height = y1 - g.y0;
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

struct RowRange {
  int b, lo, hi;
};

/// Sums the label monomials of all fillings t_b in [lo, hi], t_b <= t_{b-1}
/// for consecutive rows, added to `base`.
void fill_rows(const std::vector<RowRange>& rows, std::size_t i, int prev_b, int prev_t, int r,
               std::vector<int>& weight, IntSeries& out) {
  if (i == rows.size()) {
    out.add_term(Exponents(weight.begin(), weight.end()), 1);
    return;
  }
  const RowRange& row = rows[i];
  int cap = row.hi;
  if (prev_b == row.b - 1) cap = std::min(cap, prev_t);
  for (int t = row.lo; t <= cap; ++t) {
    for (int x = row.lo; x < t; ++x) ++weight[static_cast<std::size_t>(cell_label({x, row.b}, r))];
    fill_rows(rows, i + 1, row.b, t, r, weight, out);
    for (int x = row.lo; x < t; ++x) --weight[static_cast<std::size_t>(cell_label({x, row.b}, r))];
  }
}

}  // namespace

IntSeries gap_series(const FiberGap& g, int r, const IntSeries& like) {
  std::vector<RowRange> rows;
  for (auto [a, b] : g.cells) {
    if (rows.empty() || rows.back().b != b) rows.push_back({b, a, a + 1});
    rows.back().lo = std::min(rows.back().lo, a);
    rows.back().hi = std::max(rows.back().hi, a + 1);
  }
  IntSeries out(like.variables(), like.truncation(), Integer(1), like.grading());
  std::vector<int> weight(static_cast<std::size_t>(r) + 1, 0);
  fill_rows(rows, 0, -2, 0, r, weight, out);
  return out;
}

IntSeries fiber_series(const TruncatedDiagram& nu, const PatternAJ& p, const IntSeries& like) {
  const Partition lo = minimal_lift(nu, p);
  const auto w = multiweight(lo, p.r);
  IntSeries out = IntSeries::monomial(like, Exponents(w.begin(), w.end()), 1);
  for (const auto& g : fiber_gaps(nu, p)) out = out * gap_series(g, p.r, like);
  return out;
}

IntSeries fiber_series_brute(const TruncatedDiagram& nu, const PatternAJ& p, const IntSeries& like) {
  const Partition lo = minimal_lift(nu, p);
  const Partition hi = maximal_lift(nu, p);
  std::vector<RowRange> rows;
  for (int b = 0; b < hi.length(); ++b) rows.push_back({b, lo.row(b), hi.row(b)});
  IntSeries out(like.variables(), like.truncation(), Integer(1), like.grading());
  auto base = multiweight(lo, p.r);
  fill_rows(rows, 0, -2, 0, p.r, base, out);
  return out;
}

IntSeries brute_force_ZrJ(const PatternAJ& p, int d) {
  IntSeries out = int_series(p.j_variables(), d);
  for (const auto& nu : enumerate_truncated(p, d)) out.add_term(j_exponents(nu.multiweight(p), p), 1);
  return out;
}

std::vector<Rational> phases_A(int r, const std::vector<int>& j) {
  const auto jn = normalize_labels(j, r);
  const int m = r + 1;
  std::vector<int> size(static_cast<std::size_t>(m), 0);
  for (const auto& comp : complement_components(affine_diagram(Family::A, r), jn))
    for (int v : comp.vertices) size[static_cast<std::size_t>(v)] = static_cast<int>(comp.vertices.size());
  auto rs = [&](int i) { return size[static_cast<std::size_t>(((i % m) + m) % m)]; };
  std::vector<Rational> phase(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (std::binary_search(jn.begin(), jn.end(), i))
      phase[static_cast<std::size_t>(i)] = Rational(1, 2 + rs(i - 1)) + Rational(1, 2 + rs(i + 1));
    else
      phase[static_cast<std::size_t>(i)] = Rational(1, 2 + rs(i));
    phase[static_cast<std::size_t>(i)].canonicalize();
  }
  return phase;
}

PhaseMap phase_map_A(int r, const std::vector<int>& j) {
  return make_phase_map(indexed_variables(r + 1), normalize_labels(j, r), phases_A(r, j));
}

std::string to_string(PhaseConvention c) {
  return c == PhaseConvention::Positive ? "positive" : "arrows";
}

void compare_sides(SubstitutionReport& report, const CycSeries& lhs, const CycSeries& rhs) {
  const ConstantRatio ratio = divide_expect_constant(lhs, rhs);
  report.matched = ratio.matched;
  report.c = ratio.constant;
  report.first_mismatch = ratio.first_mismatch;
  if (report.c && !report.c->is_zero()) report.c_order = is_root_of_unity(*report.c);
  if (ratio.first_mismatch) {
    report.lhs_coefficient = lhs.coefficient(*ratio.first_mismatch);
    report.rhs_coefficient = rhs.coefficient(*ratio.first_mismatch);
  }
}

SubstitutionReport verify_substitution_A(int r, const std::vector<int>& j, int d, PhaseConvention convention,
                                         bool fibers) {
  if (d < 0) throw std::invalid_argument("verify_substitution_A: negative truncation");
  const PatternAJ p(r, j);
  const auto vars = indexed_variables(r + 1);
  const auto phases = convention == PhaseConvention::Positive
                          ? phases_A(r, p.J)
                          : substitution_phases(affine_diagram(Family::A, r), p.J);
  const PhaseMap map = make_phase_map(vars, p.J, phases);
  SubstitutionReport report;
  report.type = "A";
  report.r = r;
  report.J = p.J;
  report.truncation = d;
  report.order = map.order();
  report.convention = to_string(convention);

  const auto diagrams = enumerate_truncated(p, d);
  report.diagrams = diagrams.size();
  IntSeries zrj = int_series(p.j_variables(), d);
  for (const auto& nu : diagrams) zrj.add_term(j_exponents(nu.multiweight(p), p), 1);
  const CycSeries lhs = embed(zrj, report.order);

  std::vector<int> grading(vars.size(), 0);
  for (int v : p.J) grading[static_cast<std::size_t>(v)] = 1;
  const CycSeries rhs = substitute(formula_Zr(r, d, grading), map, report.order);
  compare_sides(report, lhs, rhs);

  if (fibers) {
    bool ok = report.c.has_value();
    const IntSeries like = int_series(vars, d, grading);
    for (std::size_t k = 0; ok && k < diagrams.size(); ++k) {
      const auto& nu = diagrams[k];
      const auto lo = multiweight(minimal_lift(nu, p), r);
      CycSeries s = substitute(IntSeries::monomial(like, Exponents(lo.begin(), lo.end()), 1), map, report.order);
      for (const auto& g : fiber_gaps(nu, p)) s = s * substitute(gap_series(g, r, like), map, report.order);
      const CycSeries expected =
          CycSeries::monomial(s, j_exponents(nu.multiweight(p), p), CycInt(report.order, 1));
      if (!(s.scaled(*report.c) == expected)) ok = false;
    }
    report.fibers_matched = ok;
  }
  return report;
}

}  // namespace kleinian
