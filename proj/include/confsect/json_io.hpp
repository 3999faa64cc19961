#pragma once

// JSON shapes for the external interfaces: braid words as signed integer
// arrays, normal forms as {delta_power, factors}, points as {re, im} or
// "inf", configurations, section outputs, torsion specs, path specs and
// tracking results.

#include <json.hpp>

#include "confsect/elliptic.hpp"
#include "confsect/garside.hpp"
#include "confsect/mobius.hpp"
#include "confsect/monodromy.hpp"

namespace confsect::io {

using nlohmann::json;

json word_to_json(const braid::BraidWord& w);
braid::BraidWord word_from_json(int strands, const json& j);

json normal_form_to_json(const braid::GarsideNormalForm& nf);

json point_to_json(const mobius::ProjectivePoint& p);
mobius::ProjectivePoint point_from_json(const json& j);

json configuration_to_json(const mobius::Configuration& c);
mobius::Configuration configuration_from_json(const json& j, double tol_sep = 1e-8);

json section_output_to_json(const mobius::SectionOutput& out);

json torsion_spec_to_json(const elliptic::TorsionSpec& spec);
elliptic::TorsionSpec torsion_spec_from_json(const json& j);

// {"type": "generator", "i": int} needs a basepoint; {"type": "samples",
// "points": [[...], ...]} carries its own configurations.
monodromy::ConfigPath path_from_json(const json& j, const mobius::Configuration& basepoint);

json tracking_result_to_json(const monodromy::TrackingResult& r);

}  // namespace confsect::io
