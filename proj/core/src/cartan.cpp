#include "kleinian/cartan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kleinian {
namespace {

void require_rank(Family f, int r) {
  const bool ok = (f == Family::A && r >= 1) || (f == Family::D && r >= 2) ||
                  (f == Family::E && r >= 6 && r <= 8);
  if (!ok) throw std::invalid_argument("invalid rank " + std::to_string(r) + " for type " + to_string(f));
}

/// Edges of the finite diagram on vertices 1..r.
std::vector<std::pair<int, int>> finite_edges(Family f, int r) {
  std::vector<std::pair<int, int>> e;
  switch (f) {
    case Family::A:
      for (int i = 1; i < r; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      if (r == 2) break;
      for (int i = 1; i + 1 <= r - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(r - 2 > 0 ? r - 2 : 1, r - 1);
      e.emplace_back(r - 2 > 0 ? r - 2 : 1, r);
      break;
    case Family::E:
      e = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
      for (int i = 6; i < r; ++i) e.emplace_back(i, i + 1);
      break;
  }
  return e;
}

Family classify(const IntMatrix& adj, const std::vector<int>& verts, int& rank) {
  const int k = static_cast<int>(verts.size());
  rank = k;
  std::vector<int> deg(static_cast<std::size_t>(k), 0);
  int edges = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      int m = adj[static_cast<std::size_t>(verts[static_cast<std::size_t>(a)])]
                 [static_cast<std::size_t>(verts[static_cast<std::size_t>(b)])];
      if (m > 1) throw std::domain_error("complement component has a multiple edge");
      if (m == 1) {
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
        ++edges;
      }
    }
  if (edges != k - 1) throw std::domain_error("complement component is not a tree");
  const int max_deg = k == 0 ? 0 : *std::max_element(deg.begin(), deg.end());
  if (max_deg <= 2) return Family::A;
  if (max_deg > 3 || std::count(deg.begin(), deg.end(), 3) != 1)
    throw std::domain_error("complement component is not of finite type");
  // Arm lengths from the branch node.
  const int centre = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
  std::vector<int> arms;
  for (int start = 0; start < k; ++start) {
    auto link = [&](int a, int b) {
      return adj[static_cast<std::size_t>(verts[static_cast<std::size_t>(a)])]
                [static_cast<std::size_t>(verts[static_cast<std::size_t>(b)])] == 1;
    };
    if (!link(centre, start)) continue;
    int prev = centre, cur = start, len = 1;
    for (;;) {
      int next = -1;
      for (int v = 0; v < k; ++v)
        if (v != prev && v != cur && link(cur, v)) next = v;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return Family::D;
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return Family::E;
  throw std::domain_error("complement component is not of finite type");
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E" || s == "e") return Family::E;
  throw std::invalid_argument("unknown root system family '" + s + "'");
}

IntMatrix cartan_matrix(Family family, int rank) {
  require_rank(family, rank);
  const auto n = static_cast<std::size_t>(rank);
  IntMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  for (auto [a, b] : finite_edges(family, rank)) {
    c[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = -1;
    c[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = -1;
  }
  return c;
}

int dual_coxeter(Family family, int rank) {
  require_rank(family, rank);
  switch (family) {
    case Family::A: return rank + 1;
    case Family::D: return 2 * rank - 2;
    case Family::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
  }
  return 0;
}

std::vector<Rational> inverse_row_sums(Family family, int rank) {
  auto c = to_rational(cartan_matrix(family, rank));
  auto x = solve_exact(c, std::vector<Rational>(static_cast<std::size_t>(rank), 1));
  if (!x) throw std::logic_error("finite Cartan matrix is singular");
  return *x;
}

RootSystemData root_system(Family family, int rank) {
  return {family, rank, cartan_matrix(family, rank), dual_coxeter(family, rank),
          inverse_row_sums(family, rank)};
}

std::vector<int> AffineDiagram::neighbours(int v) const {
  std::vector<int> out;
  for (int u = 0; u < size(); ++u)
    for (int m = 0; m < edges[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]; ++m) out.push_back(u);
  return out;
}

AffineDiagram affine_diagram(Family family, int rank) {
  require_rank(family, rank);
  if (family == Family::D && rank < 4) throw std::invalid_argument("affine D needs rank >= 4");
  const auto n = static_cast<std::size_t>(rank) + 1;
  AffineDiagram d{family, rank, IntMatrix(n, std::vector<int>(n, 0)), std::vector<int>(n, 1)};
  auto link = [&](int a, int b) {
    ++d.edges[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    ++d.edges[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  };
  switch (family) {
    case Family::A:
      for (int i = 0; i <= rank; ++i) link(i, (i + 1) % (rank + 1));
      break;
    case Family::D:
      for (auto [a, b] : finite_edges(family, rank)) link(a, b);
      link(0, 2);
      for (int i = 2; i <= rank - 2; ++i) d.marks[static_cast<std::size_t>(i)] = 2;
      break;
    case Family::E:
      for (auto [a, b] : finite_edges(family, rank)) link(a, b);
      if (rank == 6) {
        link(0, 2);
        d.marks = {1, 1, 2, 2, 3, 2, 1};
      } else if (rank == 7) {
        link(0, 1);
        d.marks = {1, 2, 2, 3, 4, 3, 2, 1};
      } else {
        link(0, 8);
        d.marks = {1, 2, 3, 4, 6, 5, 4, 3, 2};
      }
      break;
  }
  return d;
}

std::vector<int> normalize_labels(const std::vector<int>& j_set, int rank) {
  if (j_set.empty()) throw std::invalid_argument("label set J must be nonempty");
  std::set<int> s;
  for (int j : j_set) s.insert(((j % (rank + 1)) + (rank + 1)) % (rank + 1));
  return {s.begin(), s.end()};
}

std::vector<ComplementComponent> complement_components(const AffineDiagram& d,
                                                       const std::vector<int>& j_set) {
  const std::vector<int> j = normalize_labels(j_set, d.rank);
  std::vector<bool> in_j(static_cast<std::size_t>(d.size()), false);
  for (int v : j) in_j[static_cast<std::size_t>(v)] = true;
  std::vector<bool> seen = in_j;
  std::vector<ComplementComponent> out;
  for (int s = 0; s < d.size(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> verts;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (int u : d.neighbours(v))
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          stack.push_back(u);
        }
    }
    std::sort(verts.begin(), verts.end());
    ComplementComponent comp;
    comp.vertices = verts;
    comp.family = classify(d.edges, verts, comp.rank);
    comp.dual_coxeter = dual_coxeter(comp.family, comp.rank);
    const auto k = verts.size();
    RatMatrix c(k, std::vector<Rational>(k, 0));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        c[a][b] = a == b ? 2 : -d.edges[static_cast<std::size_t>(verts[a])][static_cast<std::size_t>(verts[b])];
    auto sums = solve_exact(c, std::vector<Rational>(k, 1));
    if (!sums) throw std::logic_error("component Cartan matrix is singular");
    for (std::size_t a = 0; a < k; ++a) comp.inv_row_sums[verts[a]] = (*sums)[a];
    for (int jv : j)
      for (int u : d.neighbours(jv))
        if (std::binary_search(verts.begin(), verts.end(), u)) comp.attachments[jv].push_back(u);
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Rational> substitution_phases(const AffineDiagram& d, const std::vector<int>& j_set) {
  std::vector<Rational> phase(static_cast<std::size_t>(d.size()), 0);
  for (const auto& comp : complement_components(d, j_set)) {
    const Rational step(1, comp.dual_coxeter + 1);
    for (int v : comp.vertices) phase[static_cast<std::size_t>(v)] = step;
    for (const auto& [jv, attached] : comp.attachments)
      for (int u : attached) phase[static_cast<std::size_t>(jv)] -= comp.inv_row_sums.at(u) * step;
  }
  for (auto& p : phase) p.canonicalize();
  return phase;
}

}  // namespace kleinian
