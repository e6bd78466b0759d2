#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sgpkit/presentation.hpp"
#include "sgpkit/shifted.hpp"
#include "sgpkit/types.hpp"

namespace sgpkit {

// nlohmann ADL hooks: elements and factorizations serialize as coordinate
// arrays, relations as {"left": [...], "right": [...]}.
void to_json(nlohmann::json& j, const Element& e);
void to_json(nlohmann::json& j, const Factorization& z);
void to_json(nlohmann::json& j, const Relation& rel);

/// {"dim": d, "generators": [[...], ...]}
nlohmann::json semigroup_to_json(const Semigroup& s);
Semigroup semigroup_from_json(const nlohmann::json& j);

/// {"dim": d, "offsets": [[...], ...]}
nlohmann::json family_to_json(const ShiftedFamily& f);
ShiftedFamily family_from_json(const nlohmann::json& j);

/// A nonnegative integer vector; accepts a bare integer for dimension 1.
Element element_from_json(const nlohmann::json& j);

/// Accepts a bare list of {"left","right"} objects or {"relations": [...]}.
std::vector<Relation> relations_from_json(const nlohmann::json& j);

nlohmann::json betti_report_to_json(const BettiReport& report);
nlohmann::json presentation_to_json(const Presentation& pres);
nlohmann::json sweep_to_json(const std::vector<SweepRecord>& records);

/// CSV with header n,presentation_size,betti_count,bound,complete.
std::string sweep_to_csv(const std::vector<SweepRecord>& records);

}  // namespace sgpkit
