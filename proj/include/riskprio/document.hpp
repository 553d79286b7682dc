#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "riskprio/mcs_engine.hpp"
#include "riskprio/project_model.hpp"
#include "riskprio/risk_model.hpp"

namespace riskprio {

// Everything needed to reproduce an analysis, as read from one JSON file.
//
//   {
//     "name": "...",                                   optional
//     "currency_unit": "...", "time_unit": "...",      optional
//     "activities": [ { "id": "A1", "label": "...", "predecessors": ["Ai"],
//                       "duration": 7 | {"min": 10, "mp": 15, "max": 20},
//                       "fixed_cost": 0, "variable_cost": 1.0 } ],
//     "ladders": { "probability":     {"VL": [0, 0.03], "L": [...], ...},
//                  "duration_impact": {...}, "cost_impact": {...} },
//     "matrix_scores": { "probability": [5 scores], "impact": [5 scores] },   optional
//     "risks": [ { "id": "R1", "label": "...", "activity": "A6",
//                  "probability": "VL" | {"uniform": [lo, hi]} | {"point": p},
//                  "duration_impact": "L" | {"uniform": [lo, hi]} | {"point": v}
//                                     | {"triangular": [min, mp, max]},
//                  "cost_impact": ... } ],                 optional
//     "simulation": { "iterations": 20000, "seed": 42, "percentile": 0.95 }  optional
//   }
//
// Unknown keys are rejected so typos do not silently fall back to defaults.
struct ProjectDocument {
    std::string name;
    ProjectNetwork network;
    RiskRegister risks;
    SimulationConfig simulation;
    ScoreLadder matrix_scores;

    bool operator==(const ProjectDocument&) const = default;
};

// Syntax and shape problems throw ParseError; semantic problems (cycles,
// dangling references, bad intervals) throw ValidationError.
ProjectDocument parse_document(const std::filesystem::path& path);
ProjectDocument parse_document_text(std::string_view text);

// Pretty-printed JSON that parses back to an equal document.
std::string document_to_json(const ProjectDocument& doc);

}  // namespace riskprio
