#include "kleinian/json_io.hpp"

#include <stdexcept>

namespace kleinian {

Json to_json(const Integer& z) { return z.get_str(); }

Json to_json(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json to_json(const CycInt& z) {
  Json coeffs = Json::array();
  for (const auto& c : z.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"order", z.order()}, {"coeffs", coeffs}};
}

Json to_json(const Exponents& e) {
  Json out = Json::array();
  for (int x : e) out.push_back(x);
  return out;
}

namespace {

template <class Coeff>
Json series_json(const MultiSeries<Coeff>& s) {
  Json out;
  out["variables"] = s.variables();
  out["truncation"] = s.truncation();
  if (!s.uniform_grading()) out["grading"] = s.grading();
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(Json{{"exp", to_json(e)}, {"coeff", to_json(c)}});
  out["terms"] = terms;
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long>());
  throw std::invalid_argument("expected a decimal string");
}

}  // namespace

Json to_json(const IntSeries& s) { return series_json(s); }
Json to_json(const CycSeries& s) { return series_json(s); }

IntSeries int_series_from_json(const Json& j) {
  std::vector<int> grading;
  if (j.contains("grading")) grading = j.at("grading").get<std::vector<int>>();
  IntSeries s(j.at("variables").get<std::vector<std::string>>(), j.at("truncation").get<int>(), Integer(1), grading);
  for (const auto& t : j.at("terms")) s.add_term(t.at("exp").get<Exponents>(), integer_from_json(t.at("coeff")));
  return s;
}

CycInt cycint_from_json(const Json& j) {
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(integer_from_json(c));
  return CycInt::from_powers(j.at("order").get<int>(), coeffs);
}

Json to_json(const Partition& p) { return p.parts(); }

Json to_json(const LittlewoodData& d, int m) {
  Json quotients = Json::array();
  int total = 0;
  for (const auto& q : d.quotients) {
    quotients.push_back(to_json(q));
    total += q.weight();
  }
  return Json{{"m", m},
              {"core", to_json(d.core)},
              {"quotients", quotients},
              {"core_weight", d.core.weight()},
              {"quotient_total", total}};
}

Json to_json(const TruncatedDiagram& t, const PatternAJ& p) {
  return Json{{"rows", t.rows}, {"weight", t.weight()}, {"multiweight", t.multiweight(p)}};
}

Json wall_to_json(const YoungWallD& w, int r) {
  const PatternD pat(r);
  Json out = Json::array();
  for (int x = 0; x < static_cast<int>(w.columns.size()); ++x) {
    const WallColumn s = w.columns[static_cast<std::size_t>(x)];
    std::string top;
    switch (s.top) {
      case TopHalf::Lower: top = "lower"; break;
      case TopHalf::Upper: top = "upper"; break;
      case TopHalf::None: top = s.rows > 0 && pat.split_row(s.rows - 1) ? "both" : "full"; break;
    }
    Json labels = Json::array();
    for (const auto& c : pat.cells(x, s)) labels.push_back(pat.label(c));
    out.push_back(Json{{"complete_rows", s.rows}, {"top", top}, {"labels", labels}});
  }
  return out;
}

Json to_json(const SubstitutionReport& rep) {
  Json out;
  out["type"] = rep.type;
  out["r"] = rep.r;
  out["J"] = rep.J;
  out["truncation"] = rep.truncation;
  out["order"] = rep.order;
  out["convention"] = rep.convention;
  out["c"] = rep.c ? to_json(*rep.c) : Json(nullptr);
  out["c_order"] = rep.c_order ? Json(*rep.c_order) : Json(nullptr);
  out["matched"] = rep.matched;
  out["first_mismatch"] = rep.first_mismatch ? to_json(*rep.first_mismatch) : Json(nullptr);
  if (rep.first_mismatch) {
    out["lhs_coefficient"] = rep.lhs_coefficient ? to_json(*rep.lhs_coefficient) : Json(nullptr);
    out["rhs_coefficient"] = rep.rhs_coefficient ? to_json(*rep.rhs_coefficient) : Json(nullptr);
  }
  if (rep.fibers_matched) out["fibers_matched"] = *rep.fibers_matched;
  out["diagrams"] = rep.diagrams;
  return out;
}

Json to_json(const ESubstitution& rep) {
  Json out;
  out["rank"] = rep.rank;
  out["J"] = rep.J;
  out["truncation"] = rep.truncation;
  out["order"] = rep.order;
  out["constant"] = rep.constant ? to_json(*rep.constant) : Json(nullptr);
  out["nonnegative_integral"] = rep.nonnegative_integral;
  out["witness"] = rep.witness ? to_json(*rep.witness) : Json(nullptr);
  out["normalized"] = to_json(rep.normalized);
  return out;
}

Json to_json(const CommutatorReport& rep) {
  Json out;
  out["r"] = rep.r;
  out["truncation"] = rep.truncation;
  out["basis_checked"] = rep.basis_checked;
  out["ef_relations"] = rep.ef_relations;
  out["grading_relations"] = rep.grading_relations;
  if (rep.r == 0) out["h0_identity"] = rep.h0_identity;
  out["h_sum_is_one"] = rep.h_sum_is_one;
  out["h_range"] = {rep.h_min, rep.h_max};
  out["serre"] = rep.serre ? Json(*rep.serre) : Json(nullptr);
  out["graded_trace"] = rep.graded_trace;
  if (rep.witness)
    out["witness"] = Json{{"relation", rep.witness->relation},
                          {"c", rep.witness->c},
                          {"c2", rep.witness->c2},
                          {"partition", to_json(rep.witness->partition)}};
  else
    out["witness"] = nullptr;
  return out;
}

}  // namespace kleinian
