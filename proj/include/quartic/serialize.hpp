#pragma once

// JSON and CSV encodings of solutions and configs. Every integer is written
// as a decimal string so values beyond 64 bits survive the round trip.
//
// Solution:
//   {"variant": "five_plus"|"three_plus", "k": int, "terms": [str...], "f": str,
//    "g": str, "provenance": {"config": str, "multiple": int,
//    "point": {"X": str, "Y": str} | null, "branch": 1|-1,
//    "repaired_from_paper": bool}}
// Config:
//   {"variant": ..., "k": int, "sextuple": [str x6], "multipliers": [str...],
//    "branch": 1|-1, "seed": {"X": str, "Y": str},
//    "printed_curve": {"A": str, "B": str} (optional)}

#include <iosfwd>
#include <span>
#include <vector>

#include "json.hpp"
#include "quartic/pipeline.hpp"

namespace quartic {

using Json = nlohmann::json;

Json to_json(const QuarticSolution& sol);
Json to_json(const GeneratedSolution& gen);
Json solutions_to_json(std::span<const GeneratedSolution> sols);

QuarticSolution solution_from_json(const Json& j);
GeneratedSolution generated_from_json(const Json& j);
/// Accepts an array of solutions, a single solution object, or an object
/// with a "solutions" array. Throws ParseError on schema violations.
std::vector<GeneratedSolution> solutions_from_json(const Json& j);

/// Header plus one row per solution; terms are pipe-joined in one column.
void write_csv(std::ostream& out, std::span<const GeneratedSolution> sols);

Json to_json(const FamilyConfig& cfg);
FamilyConfig config_from_json(const Json& j);
Json registry_to_json(std::span<const FamilyConfig> configs);
std::vector<FamilyConfig> registry_from_json(const Json& j);

}  // namespace quartic
