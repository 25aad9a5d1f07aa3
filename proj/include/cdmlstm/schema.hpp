#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cdmlstm {

enum class FeatureKind { continuous, categorical };

// Ordered feature list defining the model's input/output layout, the
// columns excluded from modeling, and the variance cut-offs applied
// during cleaning. Feature order is total and stable: index <-> name
// is a bijection.
struct FeatureSchema {
    struct Feature {
        std::string name;
        FeatureKind kind = FeatureKind::continuous;
    };

    std::vector<Feature> features;
    std::vector<std::string> dropped_columns;
    // column name -> strict upper bound; records above the bound are removed
    std::map<std::string, double> sigma_limits;
    std::string time_feature = "time_to_tca";

    std::size_t width() const { return features.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t time_index() const;

    // Internal consistency: unique names, time feature present,
    // sigma-limit columns present among the features.
    void validate() const;

    std::string to_json() const;
    static FeatureSchema from_json(const std::string& text);
    static FeatureSchema load(const std::string& path);
    void save(const std::string& path) const;

    // The 52 modeled Kelvins features: geometry and risk of the encounter
    // plus both objects' full 6x6 state covariance (6 sigmas + 15
    // correlation terms each).
    static FeatureSchema kelvins_default();

private:
    mutable std::unordered_map<std::string, std::size_t> index_;
    void rebuild_index() const;
};

}  // namespace cdmlstm
