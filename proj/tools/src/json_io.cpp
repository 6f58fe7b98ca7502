#include "json_io.hpp"

namespace skeinlab {

using nlohmann::json;

json laurent_json(const skein::LaurentPoly& f) {
  json arr = json::array();
  for (const auto& [e, c] : f.terms()) arr.push_back({e, skein::to_string(c)});
  return arr;
}

json series_json(const skein::TruncBivariate& s) {
  json arr = json::array();
  for (const auto& [key, c] : s.terms()) arr.push_back({key.first, key.second, skein::to_string(c)});
  return arr;
}

json poly_json(const skein::RationalPoly& p) {
  json arr = json::array();
  for (int k = p.min_exponent(); !p.is_zero() && k <= p.max_exponent(); ++k) {
    const skein::Rational c = p.coeff(k);
    if (sgn(c) != 0) arr.push_back({k, 0, skein::to_string(c)});
  }
  return arr;
}

json diagram_json(const skein::Diagram& d) {
  json inner = json::array();
  json outer = json::array();
  json through = json::array();
  int rot = 0;
  bool first_through = true;
  for (int e = 0; e < d.size(); ++e) {
    const int p = d.partner[static_cast<std::size_t>(e)];
    const int w = d.wind[static_cast<std::size_t>(e)];
    if (p < e) continue;
    if (!d.is_top(e) && !d.is_top(p)) {
      inner.push_back({e, p, w});
    } else if (d.is_top(e) && d.is_top(p)) {
      outer.push_back({e - d.bottom, p - d.bottom, w});
    } else {
      through.push_back({e, p - d.bottom, w});
      if (first_through) rot = w;
      first_through = false;
    }
  }
  return json{{"p", d.through_count()}, {"inner", inner}, {"outer", outer},
              {"through", through}, {"rot", rot}, {"loops", d.loops}};
}

json element_json(const skein::Element& e) {
  json terms = json::array();
  for (const auto& [d, c] : e.terms()) terms.push_back({{"diagram", diagram_json(d)}, {"laurent", laurent_json(c)}});
  return json{{"bottom", e.bottom()}, {"top", e.top()}, {"terms", terms}};
}

json strand_json(const skein::StrandElement& v) {
  json arr = json::array();
  for (int k = v.min_exponent(); !v.is_zero() && k <= v.max_exponent(); ++k) {
    const skein::LaurentPoly c = v.coeff(k);
    if (!c.is_zero()) arr.push_back({{"r", k}, {"laurent", laurent_json(c)}});
  }
  return arr;
}

json valuation_json(const skein::ValuationReport& r) {
  json j{{"mode", r.grading == skein::Grading::kTotal ? "algebra" : "strand"},
         {"cap", r.cap},
         {"saturated", r.saturated}};
  if (r.saturated) {
    j["valuation"] = ">=" + std::to_string(r.cap);
  } else {
    j["valuation"] = r.valuation;
  }
  if (!r.description.empty()) j["element"] = r.description;
  return j;
}

json report_json(const skein::VerificationReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    json step{{"name", s.name}, {"pass", s.passed}};
    if (!s.witness.empty()) step["witness"] = s.witness;
    steps.push_back(step);
  }
  return json{{"lemma", r.lemma},
              {"strands", r.strands},
              {"order", r.order},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"difference", r.difference},
              {"difference_valuation", r.difference_valuation},
              {"difference_saturated", r.difference_saturated},
              {"steps", steps},
              {"pass", r.pass},
              {"runtime_ms", r.runtime_ms}};
}

}  // namespace skeinlab
