#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kleinian/partitions.hpp"
#include "kleinian/series.hpp"

namespace kleinian {

/// Vector of the Fock space truncated at weight `truncation`. Zero amplitudes
/// are not stored.
struct FockVector {
  int truncation = 0;
  std::map<Partition, Integer> amplitudes;
  /// Set when an operator produced terms above the truncation.
  bool truncation_loss = false;

  static FockVector basis(const Partition& p, int truncation);
  void add(const Partition& p, const Integer& c);
  [[nodiscard]] bool is_zero() const { return amplitudes.empty(); }
  [[nodiscard]] Integer coefficient(const Partition& p) const;

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  [[nodiscard]] FockVector scaled(const Integer& k) const;
  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.truncation == b.truncation && a.amplitudes == b.amplitudes;
  }
};

/// Removes a label-c box in all ways.
FockVector apply_e(int c, const FockVector& v, int r);
/// Adds a label-c box in all ways; results above the truncation are dropped
/// and flagged.
FockVector apply_f(int c, const FockVector& v, int r);
/// Scales |l> by (#addable - #removable) label-c boxes of l.
FockVector apply_h(int c, const FockVector& v, int r);
/// Scales |l> by wt_c(l).
FockVector apply_d(int c, const FockVector& v, int r);

int h_value(const Partition& p, int c, int r);

struct FockWitness {
  std::string relation;
  int c = 0;
  int c2 = 0;
  Partition partition;
};

struct CommutatorReport {
  int r = 0;
  int truncation = 0;
  std::size_t basis_checked = 0;
  bool ef_relations = false;
  bool grading_relations = false;
  /// Only meaningful for r = 0.
  bool h0_identity = false;
  bool h_sum_is_one = false;
  int h_min = 0;
  int h_max = 0;
  /// (ad e_c)^(1 - a_cc') e_c' = 0 and the same for f, plus [e_c, e_c'] = 0
  /// for non-adjacent labels; empty when not requested.
  std::optional<bool> serre;
  bool graded_trace = false;
  std::optional<FockWitness> witness;

  [[nodiscard]] bool passed() const {
    return ef_relations && grading_relations && h_sum_is_one && graded_trace && serre.value_or(true) &&
           (r != 0 || h0_identity);
  }
};

/// Checks the relations on every basis partition of weight <= n - 1 (and
/// lower for the Serre relations, so no composition leaves the truncation).
CommutatorReport commutator_report(int r, int n, bool serre = false);

/// sum over the truncated basis of prod q_i^{wt_i}.
IntSeries graded_trace(int r, int n);

}  // namespace kleinian
