#pragma once

#include "hrum/choice.hpp"
#include "hrum/degree.hpp"
#include "hrum/detection.hpp"
#include "hrum/identification.hpp"
#include "hrum/probes.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hrum {

/// How rationals are rendered: exact `a/b` by default, or rounded decimals.
struct RenderOptions {
    std::optional<int> decimals;

    std::string operator()(const Rational& q) const;
};

struct AnalysisOptions {
    Tolerance tolerance;
    std::size_t max_items_for_rum = kDefaultRumMaxItems;
};

/// Everything the library can say about one dataset.
struct AnalysisReport {
    std::string digest;  // sha256 of the canonical JSON dataset
    Tolerance tolerance;
    std::vector<LinearOrder> composing;
    Identification identification;
    std::optional<DegreeReport> degree;    // absent when not harmful
    bool regular = false;
    std::optional<RumFeasibility> rum;     // absent when the size guard skipped it
    std::optional<CorrelationIndex> correlation;  // absent for n < 3
    std::optional<bool> single_peaked;     // absent when not harmful
};

std::string dataset_digest(const StochasticChoice& rho);

AnalysisReport analyze(const StochasticChoice& rho, const AnalysisOptions& options = {});

nlohmann::json mode_json(const Tolerance& tolerance, const RenderOptions& render);
nlohmann::json justification_json(const GroundSet& ground, const Justification& j, const RenderOptions& render);
nlohmann::json identification_json(const GroundSet& ground, const Identification& id, const RenderOptions& render);
nlohmann::json degree_json(const GroundSet& ground, const DegreeReport& degree);
nlohmann::json witness_json(const GroundSet& ground, const CompositionWitness& witness, const RenderOptions& render);
nlohmann::json rum_json(const GroundSet& ground, const RumFeasibility& rum, const RenderOptions& render);

/// Deterministic JSON rendering: sorted keys, canonical rationals.
nlohmann::json report_json(const StochasticChoice& rho, const AnalysisReport& report, const RenderOptions& render = {});

}  // namespace hrum
