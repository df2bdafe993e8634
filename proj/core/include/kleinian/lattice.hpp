#pragma once

#include <vector>

#include "kleinian/exact.hpp"

namespace kleinian {

using LatticePoint = std::vector<long>;

/// All integer points w with 1/2 w^T A w + b^T w <= bound, in lexicographic
/// order. A must be symmetric positive definite; the search is an exact
/// Fincke-Pohst recursion over the LDL^T factorization of A, so the result is
/// complete. Throws std::domain_error if A is not positive definite.
std::vector<LatticePoint> lattice_points(const RatMatrix& a, const std::vector<Rational>& b,
                                         const Rational& bound);

/// 1/2 w^T A w + b^T w, exactly.
Rational quadratic_value(const RatMatrix& a, const std::vector<Rational>& b, const LatticePoint& w);

}  // namespace kleinian
