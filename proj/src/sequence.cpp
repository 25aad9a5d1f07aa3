#include "cdmlstm/sequence.hpp"

#include <cstring>
#include <stdexcept>

#include "cdmlstm/rng.hpp"

namespace cdmlstm {

SequencePair build_training_pair(const Event& event) {
    const std::size_t t_len = event.cdms.size();
    if (t_len < 2) {
        throw std::invalid_argument("build_training_pair: event '" + event.event_id +
                                    "' has fewer than 2 CDMs");
    }
    const std::size_t width = event.cdms.front().values.size();
    SequencePair pair;
    pair.event_id = event.event_id;
    pair.input = Matrix(t_len - 1, width);
    pair.target = Matrix(t_len - 1, width);
    for (std::size_t k = 0; k + 1 < t_len; ++k) {
        std::memcpy(pair.input.row(k), event.cdms[k].values.data(), width * sizeof(double));
        std::memcpy(pair.target.row(k), event.cdms[k + 1].values.data(),
                    width * sizeof(double));
    }
    return pair;
}

std::vector<SequencePair> build_training_pairs(const std::vector<Event>& events) {
    std::vector<SequencePair> pairs;
    pairs.reserve(events.size());
    for (const auto& ev : events) pairs.push_back(build_training_pair(ev));
    return pairs;
}

std::size_t Batch::valid_steps() const {
    std::size_t n = 0;
    for (auto l : lengths) n += l;
    return n;
}

std::vector<Batch> make_batches(const std::vector<SequencePair>& pairs,
                                std::size_t batch_size, std::uint64_t shuffle_seed) {
    if (batch_size < 1) throw std::invalid_argument("make_batches: batch_size must be >= 1");

    std::vector<std::size_t> order(pairs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(shuffle_seed, 0xba7c4ULL);
    rng.shuffle(order);

    std::vector<Batch> batches;
    for (std::size_t start = 0; start < order.size(); start += batch_size) {
        const std::size_t b_count = std::min(batch_size, order.size() - start);
        std::size_t t_max = 0;
        std::size_t width = 0;
        for (std::size_t b = 0; b < b_count; ++b) {
            const auto& p = pairs[order[start + b]];
            t_max = std::max(t_max, p.input.rows);
            width = p.input.cols;
        }
        Batch batch;
        batch.inputs = Tensor3(b_count, t_max, width, 0.0);
        batch.targets = Tensor3(b_count, t_max, width, 0.0);
        batch.lengths.resize(b_count);
        for (std::size_t b = 0; b < b_count; ++b) {
            const auto& p = pairs[order[start + b]];
            batch.lengths[b] = p.input.rows;
            for (std::size_t t = 0; t < p.input.rows; ++t) {
                std::memcpy(batch.inputs.slab(b, t), p.input.row(t), width * sizeof(double));
                std::memcpy(batch.targets.slab(b, t), p.target.row(t), width * sizeof(double));
            }
        }
        batches.push_back(std::move(batch));
    }
    return batches;
}

}  // namespace cdmlstm
