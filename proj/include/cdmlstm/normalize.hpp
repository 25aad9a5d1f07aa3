#pragma once

#include <cstdint>
#include <vector>

#include "cdmlstm/dataset.hpp"
#include "cdmlstm/schema.hpp"

namespace cdmlstm {

// Per-feature standardization statistics, fitted on training data only.
// Categorical features keep their stats but are never applied.
struct NormStats {
    std::vector<double> mean;
    std::vector<double> stddev;            // > 0 wherever applied
    std::vector<std::uint8_t> applied;     // 1 for continuous features
    std::vector<std::size_t> clamped;      // zero-variance features forced to stddev 1

    std::size_t width() const { return mean.size(); }
    bool fitted() const { return !mean.empty(); }
};

// Population statistics (divisor N) over every CDM in the given events.
NormStats fit_normalizer(const std::vector<Event>& train_events, const FeatureSchema& schema);

// x -> (x - mean) / stddev on applied features; others pass through.
std::vector<double> transform(const std::vector<double>& values, const NormStats& stats);
std::vector<double> inverse_transform(const std::vector<double>& values, const NormStats& stats);

Event transform_event(const Event& event, const NormStats& stats);
std::vector<Event> transform_events(const std::vector<Event>& events, const NormStats& stats);

}  // namespace cdmlstm
