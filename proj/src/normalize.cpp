#include "cdmlstm/normalize.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace cdmlstm {

NormStats fit_normalizer(const std::vector<Event>& train_events, const FeatureSchema& schema) {
    const std::size_t width = schema.width();
    std::size_t n = 0;
    for (const auto& ev : train_events) n += ev.cdms.size();
    if (n == 0) throw std::invalid_argument("fit_normalizer: no training CDMs");

    NormStats stats;
    stats.mean.assign(width, 0.0);
    stats.stddev.assign(width, 0.0);
    stats.applied.resize(width);
    for (std::size_t f = 0; f < width; ++f) {
        stats.applied[f] = schema.features[f].kind == FeatureKind::continuous ? 1 : 0;
    }

    for (const auto& ev : train_events) {
        for (const auto& rec : ev.cdms) {
            for (std::size_t f = 0; f < width; ++f) stats.mean[f] += rec.values[f];
        }
    }
    for (std::size_t f = 0; f < width; ++f) stats.mean[f] /= static_cast<double>(n);

    for (const auto& ev : train_events) {
        for (const auto& rec : ev.cdms) {
            for (std::size_t f = 0; f < width; ++f) {
                const double d = rec.values[f] - stats.mean[f];
                stats.stddev[f] += d * d;
            }
        }
    }
    for (std::size_t f = 0; f < width; ++f) {
        stats.stddev[f] = std::sqrt(stats.stddev[f] / static_cast<double>(n));
        if (stats.applied[f] && stats.stddev[f] < 1e-12) {
            stats.stddev[f] = 1.0;
            stats.clamped.push_back(f);
            std::cerr << "warning: feature '" << schema.features[f].name
                      << "' has zero variance; stddev forced to 1\n";
        }
    }
    return stats;
}

std::vector<double> transform(const std::vector<double>& values, const NormStats& stats) {
    if (values.size() != stats.width()) {
        throw std::invalid_argument("transform: width mismatch");
    }
    std::vector<double> out(values.size());
    for (std::size_t f = 0; f < values.size(); ++f) {
        out[f] = stats.applied[f] ? (values[f] - stats.mean[f]) / stats.stddev[f] : values[f];
    }
    return out;
}

std::vector<double> inverse_transform(const std::vector<double>& values, const NormStats& stats) {
    if (values.size() != stats.width()) {
        throw std::invalid_argument("inverse_transform: width mismatch");
    }
    std::vector<double> out(values.size());
    for (std::size_t f = 0; f < values.size(); ++f) {
        out[f] = stats.applied[f] ? values[f] * stats.stddev[f] + stats.mean[f] : values[f];
    }
    return out;
}

Event transform_event(const Event& event, const NormStats& stats) {
    Event out;
    out.event_id = event.event_id;
    out.cdms.reserve(event.cdms.size());
    for (const auto& rec : event.cdms) {
        CdmRecord r;
        r.event_id = rec.event_id;
        r.values = transform(rec.values, stats);
        r.time_to_tca = rec.time_to_tca;  // kept in physical units
        out.cdms.push_back(std::move(r));
    }
    return out;
}

std::vector<Event> transform_events(const std::vector<Event>& events, const NormStats& stats) {
    std::vector<Event> out;
    out.reserve(events.size());
    for (const auto& ev : events) out.push_back(transform_event(ev, stats));
    return out;
}

}  // namespace cdmlstm
