#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdmlstm/csv.hpp"
#include "cdmlstm/schema.hpp"

namespace cdmlstm {

// One cleaned CDM projected onto the schema's feature order.
struct CdmRecord {
    std::string event_id;
    std::vector<double> values;  // length == schema width, all finite
    double time_to_tca = 0.0;    // copy of the designated time feature
};

// Ordered CDM sequence for one conjunction, earliest message first
// (time_to_tca strictly decreasing, ties kept in source order).
struct Event {
    std::string event_id;
    std::vector<CdmRecord> cdms;
};

struct CleanStats {
    std::size_t records_in = 0;
    std::size_t dropped_missing = 0;
    std::size_t dropped_sigma = 0;
    std::size_t kept = 0;
};

// Removes records with a missing value in any schema feature, then records
// whose value strictly exceeds a sigma limit; survivors are projected onto
// schema order. Throws if a schema feature is absent from the source.
std::vector<CdmRecord> clean(const RawTable& table, const FeatureSchema& schema,
                             CleanStats* stats = nullptr);

std::vector<Event> group_events(std::vector<CdmRecord> records);

std::vector<Event> filter_min_length(std::vector<Event> events, std::size_t min_len = 2);

struct DatasetSplit {
    std::vector<Event> train;
    std::vector<Event> test;
    std::uint64_t seed = 0;
    double test_fraction = 0.0;
};

// Deterministic seed-keyed permutation; first ceil(test_fraction * N)
// shuffled events go to test, the rest to train.
DatasetSplit split_train_test(std::vector<Event> events, double test_fraction,
                              std::uint64_t seed);

// Columnar dataset file: JSON header (schema + event directory) followed by
// row-major little-endian doubles. Byte layout in docs/formats.md.
void save_dataset(const std::string& path, const std::vector<Event>& events,
                  const FeatureSchema& schema);
std::vector<Event> load_dataset(const std::string& path, FeatureSchema& schema_out);

}  // namespace cdmlstm
