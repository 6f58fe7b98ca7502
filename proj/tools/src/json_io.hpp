#pragma once

#include <nlohmann/json.hpp>

#include "skein/dehnverify.hpp"
#include "skein/filtration.hpp"
#include "skein/planar.hpp"
#include "skein/trunc_series.hpp"

namespace skeinlab {

inline constexpr const char* kSchema = "skeinlab/1";

nlohmann::json laurent_json(const skein::LaurentPoly& f);
nlohmann::json series_json(const skein::TruncBivariate& s);
nlohmann::json poly_json(const skein::RationalPoly& p);
nlohmann::json diagram_json(const skein::Diagram& d);
nlohmann::json element_json(const skein::Element& e);
nlohmann::json strand_json(const skein::StrandElement& v);
nlohmann::json valuation_json(const skein::ValuationReport& r);
nlohmann::json report_json(const skein::VerificationReport& r);

}  // namespace skeinlab
