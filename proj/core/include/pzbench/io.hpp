#pragma once

// JSON forms of the workbench's inputs and reports.

#include <nlohmann/json.hpp>

#include "pzbench/extremals.hpp"
#include "pzbench/growth.hpp"
#include "pzbench/multipliers.hpp"
#include "pzbench/realline.hpp"
#include "pzbench/spectra.hpp"
#include "pzbench/torus.hpp"
#include "pzbench/zygmund.hpp"

namespace pzbench::io {

using nlohmann::json;

/// {dim, entries: [{n: [...], re, im}]}
json to_json(const torus::TrigPoly& p);
torus::TrigPoly trig_poly_from_json(const json& j);

/// {dim, elements: [[...]]}
json to_json(const spectra::FrequencySet& s);
spectra::FrequencySet frequency_set_from_json(const json& j);

/// {form, params, horizon}; params holds side, set, table or value by form.
json to_json(const multipliers::MultiplierSeq& m);
multipliers::MultiplierSeq multiplier_from_json(const json& j);

json to_json(const multipliers::PaleyReport& r);
json to_json(const zygmund::ZygmundReport& r);
json to_json(const zygmund::GreedySelection& s);
json to_json(const extremals::SharpnessTable& t);
json to_json(const growth::GrowthReport& r);

/// {kind: "atoms" | "dyadic-density", atoms: [{xi, weight}] | blocks:
/// [{k, weight}], profile, gap}; gap is null when undeclared.
json to_json(const realline::PaleyMeasure& m);
realline::PaleyMeasure measure_from_json(const json& j);

json to_json(const realline::PaleySupReport& r);

}  // namespace pzbench::io
