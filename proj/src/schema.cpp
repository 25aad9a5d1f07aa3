#include "cdmlstm/schema.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cdmlstm {

namespace {

const char* kind_name(FeatureKind k) {
    return k == FeatureKind::continuous ? "continuous" : "categorical";
}

FeatureKind kind_from_name(const std::string& s) {
    if (s == "continuous") return FeatureKind::continuous;
    if (s == "categorical") return FeatureKind::categorical;
    throw std::runtime_error("schema: unknown feature kind '" + s + "'");
}

}  // namespace

void FeatureSchema::rebuild_index() const {
    index_.clear();
    index_.reserve(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) index_[features[i].name] = i;
}

std::optional<std::size_t> FeatureSchema::index_of(std::string_view name) const {
    if (index_.size() != features.size()) rebuild_index();
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t FeatureSchema::time_index() const {
    auto idx = index_of(time_feature);
    if (!idx) throw std::runtime_error("schema: time feature '" + time_feature + "' not present");
    return *idx;
}

void FeatureSchema::validate() const {
    if (features.empty()) throw std::runtime_error("schema: empty feature list");
    rebuild_index();
    if (index_.size() != features.size()) {
        throw std::runtime_error("schema: duplicate feature names");
    }
    time_index();
    for (const auto& [col, limit] : sigma_limits) {
        if (!index_of(col)) {
            throw std::runtime_error("schema: sigma limit column '" + col +
                                     "' is not a schema feature");
        }
        (void)limit;
    }
}

std::string FeatureSchema::to_json() const {
    nlohmann::json j;
    j["time_feature"] = time_feature;
    auto& feats = j["features"] = nlohmann::json::array();
    for (const auto& f : features) {
        feats.push_back({{"name", f.name}, {"kind", kind_name(f.kind)}});
    }
    j["dropped_columns"] = dropped_columns;
    auto& lims = j["sigma_limits"] = nlohmann::json::object();
    for (const auto& [col, limit] : sigma_limits) lims[col] = limit;
    return j.dump(2);
}

FeatureSchema FeatureSchema::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("schema: invalid JSON: ") + e.what());
    }
    FeatureSchema s;
    if (j.contains("time_feature")) s.time_feature = j.at("time_feature").get<std::string>();
    for (const auto& f : j.at("features")) {
        s.features.push_back({f.at("name").get<std::string>(),
                              kind_from_name(f.value("kind", "continuous"))});
    }
    if (j.contains("dropped_columns")) {
        s.dropped_columns = j.at("dropped_columns").get<std::vector<std::string>>();
    }
    if (j.contains("sigma_limits")) {
        for (const auto& [col, limit] : j.at("sigma_limits").items()) {
            s.sigma_limits[col] = limit.get<double>();
        }
    }
    s.validate();
    return s;
}

FeatureSchema FeatureSchema::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("schema: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

void FeatureSchema::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("schema: cannot write " + path);
    out << to_json() << "\n";
}

FeatureSchema FeatureSchema::kelvins_default() {
    FeatureSchema s;
    auto add = [&s](const std::string& name) {
        s.features.push_back({name, FeatureKind::continuous});
    };

    add("time_to_tca");
    add("miss_distance");
    add("relative_speed");
    add("relative_position_r");
    add("relative_position_t");
    add("relative_position_n");
    add("relative_velocity_r");
    add("relative_velocity_t");
    add("relative_velocity_n");
    add("risk");

    // Per object: covariance diagonal sigmas plus the 15 lower-triangle terms.
    for (const std::string prefix : {"t_", "c_"}) {
        for (const char* sig : {"sigma_r", "sigma_t", "sigma_n",
                                "sigma_rdot", "sigma_tdot", "sigma_ndot"}) {
            add(prefix + std::string(sig));
        }
        for (const char* cov : {"ct_r",
                                "cn_r", "cn_t",
                                "crdot_r", "crdot_t", "crdot_n",
                                "ctdot_r", "ctdot_t", "ctdot_n", "ctdot_rdot",
                                "cndot_r", "cndot_t", "cndot_n", "cndot_rdot",
                                "cndot_tdot"}) {
            add(prefix + std::string(cov));
        }
    }

    s.dropped_columns = {"c_rcs_estimate", "t_rcs_estimate", "F10", "F3M",
                         "SSN",            "AP",             "mission_id",
                         "c_object_type"};
    s.sigma_limits = {{"t_sigma_r", 20.0},   {"c_sigma_r", 1000.0},
                      {"t_sigma_t", 2000.0}, {"c_sigma_t", 100000.0},
                      {"t_sigma_n", 10.0},   {"c_sigma_n", 450.0}};

    s.validate();
    if (s.width() != 52) {
        throw std::logic_error("default schema must have 52 features");
    }
    return s;
}

}  // namespace cdmlstm
