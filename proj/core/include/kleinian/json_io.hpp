#pragma once

#include <nlohmann/json.hpp>

#include "kleinian/exact.hpp"
#include "kleinian/fock.hpp"
#include "kleinian/partitions.hpp"
#include "kleinian/patterns.hpp"
#include "kleinian/series.hpp"
#include "kleinian/youngwalls.hpp"

namespace kleinian {

/// Keys keep insertion order, so output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Integer& z);
/// "p/q", or "p" for integers.
Json to_json(const Rational& q);
/// {"order": N, "coeffs": [...]}
Json to_json(const CycInt& z);
Json to_json(const Exponents& e);

/// {"variables", "truncation", "grading" (only when not uniform), "terms"}.
Json to_json(const IntSeries& s);
Json to_json(const CycSeries& s);
IntSeries int_series_from_json(const Json& j);
CycInt cycint_from_json(const Json& j);

Json to_json(const Partition& p);
/// {"m", "core", "quotients", "core_weight", "quotient_total"}
Json to_json(const LittlewoodData& d, int m);
Json to_json(const TruncatedDiagram& t, const PatternAJ& p);

/// [{"complete_rows", "top", "labels"}, ...]; labels bottom to top, grey included.
Json wall_to_json(const YoungWallD& w, int r);

Json to_json(const SubstitutionReport& rep);
Json to_json(const ESubstitution& rep);
Json to_json(const CommutatorReport& rep);

}  // namespace kleinian
