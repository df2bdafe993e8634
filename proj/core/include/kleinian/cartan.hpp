#pragma once

#include <map>
#include <string>
#include <vector>

#include "kleinian/exact.hpp"

namespace kleinian {

enum class Family { A, D, E };

std::string to_string(Family f);
Family parse_family(const std::string& s);

/// Finite-type data. Vertex k of the diagram is row k-1 of the matrices.
struct RootSystemData {
  Family family;
  int rank;
  IntMatrix cartan;
  int dual_coxeter;
  std::vector<Rational> inv_row_sums;
};

/// Throws std::invalid_argument for an unsupported rank. Type D accepts
/// r >= 2; D_3 has the shape of A_3 and D_2 is A_1 x A_1.
IntMatrix cartan_matrix(Family family, int rank);
int dual_coxeter(Family family, int rank);
std::vector<Rational> inverse_row_sums(Family family, int rank);
RootSystemData root_system(Family family, int rank);

/// Extended Dynkin diagram on vertices 0..rank, vertex 0 the extending node.
/// `edges[i][j]` is the edge multiplicity (2 only for affine A_1).
struct AffineDiagram {
  Family family;
  int rank;
  IntMatrix edges;
  std::vector<int> marks;

  [[nodiscard]] int size() const { return rank + 1; }
  [[nodiscard]] std::vector<int> neighbours(int v) const;
};

AffineDiagram affine_diagram(Family family, int rank);

/// Connected component of the diagram induced on I \ J.
struct ComplementComponent {
  std::vector<int> vertices;
  Family family;
  int rank;
  int dual_coxeter;
  std::map<int, Rational> inv_row_sums;
  /// j in J -> adjacent vertices of this component, repeated by multiplicity.
  std::map<int, std::vector<int>> attachments;
};

std::vector<ComplementComponent> complement_components(const AffineDiagram& d, const std::vector<int>& j_set);

/// Phases, as fractions of a full turn, of the root-of-unity substitution
/// attached to (diagram, J):
///   i not in J: 1 / (h_i + 1)
///   i in J:     sum over arrows i -> j not in J of -c_j / (h_j + 1).
std::vector<Rational> substitution_phases(const AffineDiagram& d, const std::vector<int>& j_set);

/// Canonical form of a label set: reduced into 0..rank, sorted, unique.
/// Throws on an empty set.
std::vector<int> normalize_labels(const std::vector<int>& j_set, int rank);

}  // namespace kleinian
