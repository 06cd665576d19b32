#pragma once

#include <json.hpp>

#include "ginv/fuzz.hpp"
#include "ginv/invariants.hpp"
#include "ginv/numeric_oracle.hpp"

namespace ginv {

/// JSON encodings of the exact types: rationals as "p/q" strings, power
/// products as sorted base/exponent lists, phases as tag plus twist list.
/// Every CLI-level JSON document carries "schema_version": 1.
constexpr int kJsonSchemaVersion = 1;

nlohmann::json to_json(const Rat& r);
nlohmann::json to_json(const GaussianRat& z);
nlohmann::json to_json(const PowerProduct& p);
nlohmann::json to_json(const PhaseTwist& t);
nlohmann::json to_json(const UnitPhase& u);
nlohmann::json to_json(const Fingerprint& fp);
nlohmann::json to_json(const DecoratedGamma& g);
nlohmann::json to_json(const MoveReport& report);
nlohmann::json to_json(const SuiteSummary& summary);

}  // namespace ginv
