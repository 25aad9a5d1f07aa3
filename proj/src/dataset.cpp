#include "cdmlstm/dataset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

#include "cdmlstm/rng.hpp"

namespace cdmlstm {

std::vector<CdmRecord> clean(const RawTable& table, const FeatureSchema& schema,
                             CleanStats* stats) {
    schema.validate();

    std::vector<std::size_t> feature_col(schema.width());
    for (std::size_t i = 0; i < schema.width(); ++i) {
        const auto col = table.column(schema.features[i].name);
        if (!col) {
            throw std::runtime_error("clean: schema feature '" + schema.features[i].name +
                                     "' not found in source columns");
        }
        feature_col[i] = *col;
    }

    std::vector<std::pair<std::size_t, double>> limits;  // (feature index, bound)
    for (const auto& [name, bound] : schema.sigma_limits) {
        limits.emplace_back(*schema.index_of(name), bound);
    }
    const std::size_t time_idx = schema.time_index();

    std::vector<CdmRecord> out;
    out.reserve(table.rows.size());
    for (const RawRecord& row : table.rows) {
        if (stats) ++stats->records_in;

        bool has_missing = false;
        for (std::size_t i = 0; i < feature_col.size() && !has_missing; ++i) {
            has_missing = !row.cells[feature_col[i]].is_number;
        }
        if (has_missing) {
            if (stats) ++stats->dropped_missing;
            continue;
        }

        bool abnormal = false;
        for (const auto& [idx, bound] : limits) {
            if (row.cells[feature_col[idx]].num > bound) {  // strict: boundary kept
                abnormal = true;
                break;
            }
        }
        if (abnormal) {
            if (stats) ++stats->dropped_sigma;
            continue;
        }

        CdmRecord rec;
        rec.event_id = row.event_id;
        rec.values.resize(schema.width());
        for (std::size_t i = 0; i < schema.width(); ++i) {
            rec.values[i] = row.cells[feature_col[i]].num;
        }
        rec.time_to_tca = rec.values[time_idx];
        out.push_back(std::move(rec));
        if (stats) ++stats->kept;
    }
    return out;
}

std::vector<Event> group_events(std::vector<CdmRecord> records) {
    std::vector<Event> events;
    std::unordered_map<std::string, std::size_t> slot;
    for (auto& rec : records) {
        auto [it, inserted] = slot.try_emplace(rec.event_id, events.size());
        if (inserted) {
            events.push_back(Event{rec.event_id, {}});
        }
        events[it->second].cdms.push_back(std::move(rec));
    }
    for (auto& ev : events) {
        std::stable_sort(ev.cdms.begin(), ev.cdms.end(),
                         [](const CdmRecord& a, const CdmRecord& b) {
                             return a.time_to_tca > b.time_to_tca;
                         });
    }
    return events;
}

std::vector<Event> filter_min_length(std::vector<Event> events, std::size_t min_len) {
    if (min_len < 1) throw std::invalid_argument("filter_min_length: min_len must be >= 1");
    std::vector<Event> out;
    out.reserve(events.size());
    for (auto& ev : events) {
        if (ev.cdms.size() >= min_len) out.push_back(std::move(ev));
    }
    return out;
}

DatasetSplit split_train_test(std::vector<Event> events, double test_fraction,
                              std::uint64_t seed) {
    if (test_fraction < 0.0 || test_fraction > 1.0) {
        throw std::invalid_argument("split_train_test: test_fraction must be in [0, 1]");
    }
    const std::size_t n = events.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(seed, 0x5911f7ULL);  // split stream tag
    rng.shuffle(order);

    const auto n_test = static_cast<std::size_t>(
        std::ceil(test_fraction * static_cast<double>(n)));

    DatasetSplit split;
    split.seed = seed;
    split.test_fraction = test_fraction;
    split.test.reserve(n_test);
    split.train.reserve(n - n_test);
    for (std::size_t i = 0; i < n; ++i) {
        auto& dst = (i < n_test) ? split.test : split.train;
        dst.push_back(std::move(events[order[i]]));
    }
    return split;
}

namespace {

constexpr char kDatasetMagic[8] = {'C', 'D', 'M', 'D', 'S', 'E', 'T', '\0'};
constexpr std::uint32_t kDatasetVersion = 1;

static_assert(std::endian::native == std::endian::little,
              "dataset format is little-endian; big-endian hosts unsupported");

template <class T>
void write_pod(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T read_pod(std::istream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw std::runtime_error("dataset: truncated file");
    return v;
}

}  // namespace

void save_dataset(const std::string& path, const std::vector<Event>& events,
                  const FeatureSchema& schema) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("dataset: cannot write " + path);

    nlohmann::json header;
    header["schema"] = nlohmann::json::parse(schema.to_json());
    auto& dir = header["events"] = nlohmann::json::array();
    for (const auto& ev : events) {
        dir.push_back({{"id", ev.event_id}, {"count", ev.cdms.size()}});
    }
    const std::string header_text = header.dump();

    out.write(kDatasetMagic, sizeof(kDatasetMagic));
    write_pod(out, kDatasetVersion);
    write_pod(out, static_cast<std::uint64_t>(header_text.size()));
    out.write(header_text.data(), static_cast<std::streamsize>(header_text.size()));

    for (const auto& ev : events) {
        for (const auto& rec : ev.cdms) {
            if (rec.values.size() != schema.width()) {
                throw std::runtime_error("dataset: record width mismatch in event " +
                                         ev.event_id);
            }
            out.write(reinterpret_cast<const char*>(rec.values.data()),
                      static_cast<std::streamsize>(rec.values.size() * sizeof(double)));
        }
    }
    if (!out) throw std::runtime_error("dataset: write failed for " + path);
}

std::vector<Event> load_dataset(const std::string& path, FeatureSchema& schema_out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("dataset: cannot open " + path);

    char magic[sizeof(kDatasetMagic)];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kDatasetMagic, sizeof(magic)) != 0) {
        throw std::runtime_error("dataset: bad magic in " + path);
    }
    const auto version = read_pod<std::uint32_t>(in);
    if (version != kDatasetVersion) {
        throw std::runtime_error("dataset: unsupported version " + std::to_string(version));
    }
    const auto header_len = read_pod<std::uint64_t>(in);
    std::string header_text(header_len, '\0');
    in.read(header_text.data(), static_cast<std::streamsize>(header_len));
    if (!in) throw std::runtime_error("dataset: truncated header");

    nlohmann::json header = nlohmann::json::parse(header_text);
    schema_out = FeatureSchema::from_json(header.at("schema").dump());
    const std::size_t width = schema_out.width();
    const std::size_t time_idx = schema_out.time_index();

    std::vector<Event> events;
    for (const auto& entry : header.at("events")) {
        Event ev;
        ev.event_id = entry.at("id").get<std::string>();
        const auto count = entry.at("count").get<std::size_t>();
        ev.cdms.resize(count);
        for (auto& rec : ev.cdms) {
            rec.event_id = ev.event_id;
            rec.values.resize(width);
            in.read(reinterpret_cast<char*>(rec.values.data()),
                    static_cast<std::streamsize>(width * sizeof(double)));
            if (!in) throw std::runtime_error("dataset: truncated body");
            rec.time_to_tca = rec.values[time_idx];
        }
        events.push_back(std::move(ev));
    }
    return events;
}

}  // namespace cdmlstm
