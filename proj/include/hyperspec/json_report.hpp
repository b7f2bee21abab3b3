#pragma once

#include <json.hpp>

#include "hyperspec/bounds.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/suite.hpp"

namespace hyperspec {

// Insertion-ordered JSON so that emitted documents re-serialize byte
// identically after a parse round-trip.
using Json = nlohmann::ordered_json;

Json to_json(const SolverOptions& opts);
Json to_json(const SpectralEstimate& est);
Json to_json(const Classification& c);
Json to_json(const BoundEntry& entry);
Json to_json(const CheckResult& check);
Json to_json(const BoundReport& report);
Json to_json(const SuiteSummary& summary);

}  // namespace hyperspec
