#include "kleinian/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kleinian/cartan.hpp"

namespace kleinian {

int cell_label(const Cell& c, int r) {
  const int m = r + 1;
  return (((c.first - c.second) % m) + m) % m;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char ch) { return std::isspace(ch); }),
                token.end());
    if (token.empty()) {
      if (s.find_first_not_of(" \t") == std::string::npos) break;
      throw std::invalid_argument("malformed partition string '" + s + "'");
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition string '" + s + "'");
    }
    if (used != token.size()) throw std::invalid_argument("malformed partition string '" + s + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

Partition Partition::from_cells(const std::vector<Cell>& cells) {
  std::set<Cell> set(cells.begin(), cells.end());
  std::vector<int> rows;
  for (auto [a, b] : set) {
    if (a < 0 || b < 0) throw std::invalid_argument("cell outside N x N");
    if (static_cast<int>(rows.size()) <= b) rows.resize(static_cast<std::size_t>(b) + 1, 0);
    rows[static_cast<std::size_t>(b)] = std::max(rows[static_cast<std::size_t>(b)], a + 1);
  }
  Partition p(rows);  // validates monotonicity
  if (p.weight() != static_cast<int>(set.size())) throw std::invalid_argument("cell set is not down-closed");
  return p;
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row(int b) const {
  return b >= 0 && b < length() ? parts_[static_cast<std::size_t>(b)] : 0;
}

bool Partition::contains(const Cell& c) const { return c.first >= 0 && c.first < row(c.second); }

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int b = 0; b < length(); ++b)
    for (int a = 0; a < parts_[static_cast<std::size_t>(b)]; ++a) out.emplace_back(a, b);
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int a = 0; a < p; ++a) ++out[static_cast<std::size_t>(a)];
  return Partition(std::move(out));
}

std::vector<Cell> Partition::removable_cells() const {
  std::vector<Cell> out;
  for (int b = 0; b < length(); ++b)
    if (row(b + 1) < row(b)) out.emplace_back(row(b) - 1, b);
  return out;
}

std::vector<Cell> Partition::addable_cells() const {
  std::vector<Cell> out;
  for (int b = 0; b <= length(); ++b)
    if (b == 0 || row(b) < row(b - 1)) out.emplace_back(row(b), b);
  return out;
}

Partition Partition::with_cell(const Cell& c) const {
  std::vector<int> p = parts_;
  if (c.second == length()) p.push_back(0);
  if (c.second > length() || p[static_cast<std::size_t>(c.second)] != c.first)
    throw std::invalid_argument("cell is not addable");
  ++p[static_cast<std::size_t>(c.second)];
  return Partition(std::move(p));
}

Partition Partition::without_cell(const Cell& c) const {
  if (c.second >= length() || row(c.second) != c.first + 1 || row(c.second + 1) > c.first)
    throw std::invalid_argument("cell is not removable");
  std::vector<int> p = parts_;
  --p[static_cast<std::size_t>(c.second)];
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<int> beta_set(const Partition& p, int beads) {
  std::vector<int> beta(static_cast<std::size_t>(beads));
  for (int i = 0; i < beads; ++i) beta[static_cast<std::size_t>(i)] = p.row(i) + beads - 1 - i;
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int beads = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < beads; ++i) parts.push_back(beta[static_cast<std::size_t>(i)] - (beads - 1 - i));
  return Partition(std::move(parts));
}

std::vector<Cell> difference(const Partition& big, const Partition& small) {
  std::vector<Cell> out;
  for (int b = 0; b < big.length(); ++b)
    for (int a = small.row(b); a < big.row(b); ++a) out.emplace_back(a, b);
  return out;
}

bool is_rim_hook(const std::vector<Cell>& cells) {
  if (cells.empty()) return false;
  std::set<Cell> set(cells.begin(), cells.end());
  if (set.size() != cells.size()) return false;
  for (auto [a, b] : set)
    if (set.count({a + 1, b}) && set.count({a, b + 1}) && set.count({a + 1, b + 1})) return false;
  std::set<Cell> seen{*set.begin()};
  std::vector<Cell> stack{*set.begin()};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    for (Cell n : {Cell{a + 1, b}, Cell{a - 1, b}, Cell{a, b + 1}, Cell{a, b - 1}})
      if (set.count(n) && seen.insert(n).second) stack.push_back(n);
  }
  return seen.size() == set.size();
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_weight; ++n) {
    auto ps = partitions_of(n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

void for_each_partition(int max_weight, const std::function<void(const Partition&)>& f) {
  for (int n = 0; n <= max_weight; ++n)
    for (const auto& p : partitions_of(n)) f(p);
}

std::vector<int> multiweight(const Partition& p, int r) {
  if (r < 0) throw std::invalid_argument("multiweight: negative rank");
  std::vector<int> w(static_cast<std::size_t>(r) + 1, 0);
  for (int b = 0; b < p.length(); ++b)
    for (int a = 0; a < p.row(b); ++a) ++w[static_cast<std::size_t>(cell_label({a, b}, r))];
  return w;
}

std::vector<BorderStrip> removable_border_strips(const Partition& p, int length) {
  if (length < 1) throw std::invalid_argument("border strip length must be positive");
  std::vector<BorderStrip> out;
  const int beads = p.length();
  const auto beta = beta_set(p, beads);
  const std::set<int> occupied(beta.begin(), beta.end());
  for (int i = 0; i < beads; ++i) {
    const int target = beta[static_cast<std::size_t>(i)] - length;
    if (target < 0 || occupied.count(target)) continue;
    auto moved = beta;
    moved[static_cast<std::size_t>(i)] = target;
    out.push_back({difference(p, from_beta(moved))});
  }
  return out;
}

Partition remove_border_strip(const Partition& p, const BorderStrip& s) {
  std::set<Cell> strip(s.cells.begin(), s.cells.end());
  std::vector<Cell> rest;
  for (const Cell& c : p.cells())
    if (!strip.count(c)) rest.push_back(c);
  if (rest.size() + s.cells.size() != static_cast<std::size_t>(p.weight()) || !is_rim_hook(s.cells))
    throw std::invalid_argument("not a border strip of the partition");
  try {
    return Partition::from_cells(rest);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("border strip is not removable");
  }
}

Partition add_border_strip(const Partition& p, const BorderStrip& s) {
  std::vector<Cell> all = p.cells();
  for (const Cell& c : s.cells) {
    if (p.contains(c)) throw std::invalid_argument("strip overlaps the partition");
    all.push_back(c);
  }
  Partition q;
  try {
    q = Partition::from_cells(all);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("adding the strip does not give a partition");
  }
  if (!is_rim_hook(s.cells)) throw std::invalid_argument("not a border strip");
  return q;
}

Partition core(const Partition& p, int m) {
  if (m < 1) throw std::invalid_argument("core: m must be positive");
  Partition cur = p;
  for (;;) {
    auto strips = removable_border_strips(cur, m);
    if (strips.empty()) return cur;
    cur = remove_border_strip(cur, strips.front());
  }
}

bool is_core(const Partition& p, int m) { return removable_border_strips(p, m).empty(); }

std::set<Partition> all_cores(const Partition& p, int m) {
  if (m < 1) throw std::invalid_argument("all_cores: m must be positive");
  std::map<Partition, std::set<Partition>> memo;
  std::function<const std::set<Partition>&(const Partition&)> go = [&](const Partition& q) -> const std::set<Partition>& {
    if (auto it = memo.find(q); it != memo.end()) return it->second;
    std::set<Partition> out;
    const auto strips = removable_border_strips(q, m);
    if (strips.empty()) out.insert(q);
    for (const auto& s : strips) {
      const auto& sub = go(remove_border_strip(q, s));
      out.insert(sub.begin(), sub.end());
    }
    return memo.emplace(q, std::move(out)).first->second;
  };
  return go(p);
}

LittlewoodData littlewood_decompose(const Partition& p, int m) {
  if (m < 1) throw std::invalid_argument("littlewood: m must be positive");
  const int beads = (p.length() + m - 1) / m * m;
  const auto beta = beta_set(p, beads);
  std::vector<std::vector<int>> levels(static_cast<std::size_t>(m));
  for (int b : beta) levels[static_cast<std::size_t>(b % m)].push_back(b / m);
  LittlewoodData out;
  std::vector<int> core_beta;
  for (int j = 0; j < m; ++j) {
    auto& lv = levels[static_cast<std::size_t>(j)];
    std::sort(lv.rbegin(), lv.rend());
    const int n = static_cast<int>(lv.size());
    std::vector<int> parts;
    for (int t = 0; t < n; ++t) parts.push_back(lv[static_cast<std::size_t>(t)] - (n - 1 - t));
    out.quotients.emplace_back(std::move(parts));
    for (int t = 0; t < n; ++t) core_beta.push_back(j + m * t);
  }
  out.core = from_beta(core_beta);
  return out;
}

Partition littlewood_compose(const LittlewoodData& d, int m) {
  if (m < 1) throw std::invalid_argument("littlewood: m must be positive");
  if (static_cast<int>(d.quotients.size()) != m) throw std::invalid_argument("littlewood: need m quotients");
  if (!is_core(d.core, m)) throw std::invalid_argument("littlewood: core is not an m-core");
  int beads = (d.core.length() + m - 1) / m * m;
  std::vector<std::vector<int>> levels;
  for (;;) {
    levels.assign(static_cast<std::size_t>(m), {});
    for (int b : beta_set(d.core, beads)) levels[static_cast<std::size_t>(b % m)].push_back(b / m);
    bool enough = true;
    for (int j = 0; j < m; ++j)
      if (levels[static_cast<std::size_t>(j)].size() < static_cast<std::size_t>(d.quotients[static_cast<std::size_t>(j)].length()))
        enough = false;
    if (enough) break;
    beads += m;
  }
  std::vector<int> beta;
  for (int j = 0; j < m; ++j) {
    const int n = static_cast<int>(levels[static_cast<std::size_t>(j)].size());
    const Partition& mu = d.quotients[static_cast<std::size_t>(j)];
    for (int t = 0; t < n; ++t) beta.push_back(j + m * (mu.row(t) + n - 1 - t));
  }
  return from_beta(beta);
}

IntPoly q_binomial(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("q_binomial: negative argument");
  // row[k] = (n choose k)_q, built by (n choose k) = (n-1 choose k-1) + q^k (n-1 choose k)
  const int n = a + b;
  std::vector<IntPoly> row{IntPoly::monomial(0)};
  for (int m = 1; m <= n; ++m) {
    std::vector<IntPoly> next(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
      IntPoly v;
      if (k >= 1) v = v + row[static_cast<std::size_t>(k - 1)];
      if (k <= m - 1) v = v + IntPoly::monomial(k) * row[static_cast<std::size_t>(k)];
      next[static_cast<std::size_t>(k)] = v;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(a)];
}

IntPoly rectangle_partitions(int a, int b) {
  std::vector<Integer> c(static_cast<std::size_t>(a) * static_cast<std::size_t>(b) + 1, 0);
  for_each_partition(a * b, [&](const Partition& p) {
    if (p.length() <= b && p.row(0) <= a) c[static_cast<std::size_t>(p.weight())] += 1;
  });
  return IntPoly(std::move(c));
}

CycInt q_binomial_at_root(int a, int b, const CycInt& xi) {
  if (a < 0 || b < 0) throw std::invalid_argument("q_binomial_at_root: negative argument");
  const auto order = is_root_of_unity(xi);
  if (!order || *order != a + b + 1)
    throw std::invalid_argument("q_binomial_at_root: xi must be a primitive root of order a+b+1");
  const IntPoly poly = q_binomial(a, b);
  CycInt value(xi.order());
  for (int k = poly.degree(); k >= 0; --k) {
    value *= xi;
    value += CycInt(xi.order(), poly.coefficient(k));
  }
  return value;
}

std::optional<int> q_binomial_root_sign(int a, int b) {
  const int n = a + b + 1;
  const CycInt xi = root_of_unity(n, 1);
  const CycInt value = q_binomial_at_root(a, b, xi);
  const CycInt expected = root_of_unity(n, -static_cast<long>(a) * (a + 1) / 2);
  if (value == expected) return 0;
  if (value == -expected) return 1;
  return std::nullopt;
}

std::vector<Cell> monomial_ideal_generators(const Partition& p) {
  std::vector<Cell> out;
  for (int b = 0; b <= p.length(); ++b)
    if (b == 0 || p.row(b) < p.row(b - 1)) out.emplace_back(p.row(b), b);
  return out;
}

HilbertComponent hilbert_component(const Partition& p, int r) {
  if (r < 1) throw std::invalid_argument("hilbert_component: r must be positive");
  auto d = littlewood_decompose(p, r + 1);
  int n = 0;
  for (const auto& q : d.quotients) n += q.weight();
  return {d.core, n};
}

IntSeries brute_force_Zr(int r, int d) {
  IntSeries out = int_series(indexed_variables(r + 1), d);
  for_each_partition(d, [&](const Partition& p) {
    auto w = multiweight(p, r);
    out.add_term(Exponents(w.begin(), w.end()), 1);
  });
  return out;
}

IntSeries formula_Zr(int r, int d, const std::vector<int>& grading) {
  if (r < 0) throw std::invalid_argument("formula_Zr: negative rank");
  const IntSeries like = int_series(indexed_variables(r + 1), d, grading);
  const Exponents q(static_cast<std::size_t>(r) + 1, 1);
  IntSeries euler = euler_product(like, q, r + 1);
  if (r == 0) return euler;
  return euler * lattice_theta(cartan_matrix(Family::A, r), std::vector<int>(static_cast<std::size_t>(r) + 1, 1), like);
}

IntSeries jacobi_product(int d) {
  const IntSeries like = int_series(indexed_variables(2), d);
  IntSeries out = IntSeries::constant(like, 1);
  auto one_plus = [&](const Exponents& m) {
    return IntSeries::constant(like, 1) + IntSeries::monomial(like, m, 1);
  };
  auto geometric = [&](const Exponents& m) {
    IntSeries g(like.variables(), like.truncation(), Integer(1));
    for (int j = 0; j * like.degree(m) <= d; ++j) g.add_term({j * m[0], j * m[1]}, 1);
    return g;
  };
  for (int k = 1; 2 * k - 1 <= d; ++k) {
    out = out * one_plus({2 * k - 1, 2 * k});
    out = out * one_plus({2 * k - 1, 2 * k - 2});
    out = out * geometric({k, k});
    out = out * geometric({2 * k - 1, 2 * k - 1});
  }
  return out;
}

QBinomialRootReport check_q_binomial_roots(int max_ab) {
  if (max_ab < 1) throw std::invalid_argument("check_q_binomial_roots: bound must be positive");
  QBinomialRootReport rep;
  rep.max_ab = max_ab;
  struct Rule {
    const char* name;
    int (*k)(int, int);
  };
  static constexpr Rule rules[] = {{"k = 0", [](int, int) { return 0; }},
                                   {"k = 1", [](int, int) { return 1; }},
                                   {"k = a mod 2", [](int a, int) { return a % 2; }},
                                   {"k = b mod 2", [](int, int b) { return b % 2; }},
                                   {"k = a + b mod 2", [](int a, int b) { return (a + b) % 2; }}};
  std::map<std::pair<int, int>, int> found;
  for (int a = 1; a <= max_ab; ++a)
    for (int b = 1; b <= max_ab; ++b) {
      ++rep.pairs_checked;
      if (auto k = q_binomial_root_sign(a, b))
        found[{a, b}] = *k;
      else if (!rep.witness)
        rep.witness = std::array<int, 3>{a, b, 0};
    }
  if (rep.witness) return rep;
  const Rule* rule = nullptr;
  for (const auto& candidate : rules) {
    bool ok = true;
    for (const auto& [ab, k] : found) ok = ok && candidate.k(ab.first, ab.second) == k;
    if (ok) {
      rule = &candidate;
      break;
    }
  }
  if (!rule) return rep;
  rep.sign_rule = rule->name;
  rep.all_roots_matched = true;
  for (int a = 1; a <= max_ab; ++a)
    for (int b = 1; b <= max_ab; ++b) {
      const int n = a + b + 1;
      for (int j = 1; j < n; ++j) {
        if (std::gcd(j, n) != 1) continue;
        ++rep.roots_checked;
        CycInt expect = root_of_unity(n, -static_cast<long>(j) * a * (a + 1) / 2);
        if (rule->k(a, b)) expect = -expect;
        if (q_binomial_at_root(a, b, root_of_unity(n, j)) != expect && rep.all_roots_matched) {
          rep.all_roots_matched = false;
          rep.witness = std::array<int, 3>{a, b, j};
        }
      }
    }
  return rep;
}

}  // namespace kleinian
