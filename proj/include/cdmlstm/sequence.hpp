#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdmlstm/dataset.hpp"
#include "cdmlstm/matrix.hpp"

namespace cdmlstm {

// Time-shifted training pair: input row k is CDM k+1, target row k is
// CDM k+2 (1-based), so the network predicts the next message at every step.
struct SequencePair {
    std::string event_id;
    Matrix input;   // (T-1) x F
    Matrix target;  // (T-1) x F
};

SequencePair build_training_pair(const Event& event);
std::vector<SequencePair> build_training_pairs(const std::vector<Event>& events);

// Right-padded mini-batch. mask(b, t) == t < lengths[b]; padded cells are
// zero and contribute nothing to loss or gradients.
struct Batch {
    Tensor3 inputs;   // B x T_max x F
    Tensor3 targets;  // B x T_max x F
    std::vector<std::size_t> lengths;

    std::size_t size() const { return lengths.size(); }
    std::size_t max_len() const { return inputs.n1; }
    std::size_t width() const { return inputs.n2; }
    bool valid(std::size_t b, std::size_t t) const { return t < lengths[b]; }
    std::size_t valid_steps() const;
};

// Deterministic shuffle keyed by shuffle_seed, then greedy grouping in
// shuffled order; each batch pads to its own longest pair.
std::vector<Batch> make_batches(const std::vector<SequencePair>& pairs,
                                std::size_t batch_size, std::uint64_t shuffle_seed);

}  // namespace cdmlstm
