#pragma once

#include <cstdint>

#include "json.hpp"

#include "okdens/field.hpp"
#include "okdens/montecarlo.hpp"
#include "okdens/splitting.hpp"
#include "okdens/unimodular.hpp"
#include "okdens/zeta.hpp"

namespace okdens {

using Json = nlohmann::json;

/// Integer from a JSON number or a decimal string (for values beyond 64 bits).
BigInt big_from_json(const Json& j);

/// {"field": [ints], "n": int, "m": int, "entries": [[[k ints] x m] x n]}
MatrixOK matrix_from_json(const Json& j, const FieldOptions& options = {});
Json matrix_to_json(const MatrixOK& mat);

Json field_to_json(const NumberField& field);
Json split_to_json(const PrimeSplit& split);
Json report_to_json(const UnimodReport& report);
Json density_to_json(const EulerProductResult& result);
Json experiment_to_json(const ExperimentReport& report);
Json exact_density_to_json(const ExactDensity& density);

}  // namespace okdens
