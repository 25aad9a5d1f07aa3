#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdmlstm/matrix.hpp"
#include "cdmlstm/rng.hpp"
#include "cdmlstm/sequence.hpp"

namespace cdmlstm {

// One LSTM layer. Gate blocks are ordered [input i, forget f, cell g,
// output o]; both bias vectors are kept (the dual-bias parameterization).
struct LstmLayerParams {
    Matrix w_ih;  // 4H x D_in
    Matrix w_hh;  // 4H x H
    std::vector<double> b_ih;  // 4H
    std::vector<double> b_hh;  // 4H

    std::size_t hidden() const { return w_hh.cols; }
    std::size_t input_dim() const { return w_ih.cols; }
};

// Stacked LSTM with a ReLU + linear head. Training math is double
// precision; checkpoints store single precision.
struct StackedLstmParams {
    std::vector<LstmLayerParams> layers;
    Matrix head_w;             // out x H
    std::vector<double> head_b;  // out
    double dropout_rate = 0.2;

    std::size_t input_dim() const { return layers.front().input_dim(); }
    std::size_t hidden() const { return layers.front().hidden(); }
    std::size_t output_dim() const { return head_b.size(); }
    std::size_t count() const;
    void validate() const;  // dimension chaining
};

// Gradients are shape-congruent to the parameters.
struct Gradients {
    std::vector<LstmLayerParams> layers;
    Matrix head_w;
    std::vector<double> head_b;
};

Gradients zero_gradients(const StackedLstmParams& params);

// Named views over every parameter tensor, in checkpoint order:
// layer<k>.{w_ih, w_hh, b_ih, b_hh}..., head.w, head.b
struct TensorRef {
    std::string name;
    std::vector<double>* data;
};
struct ConstTensorRef {
    std::string name;
    const std::vector<double>* data;
};
std::vector<TensorRef> tensor_refs(StackedLstmParams& p);
std::vector<TensorRef> tensor_refs(Gradients& g);
std::vector<ConstTensorRef> tensor_refs(const StackedLstmParams& p);
std::vector<ConstTensorRef> tensor_refs(const Gradients& g);

// Total learnable parameters: per layer 4H*D_in + 4H*H + 8H, plus the
// out*H + out head. Defaults (52, 256, 2) give 857,140.
std::size_t param_count(std::size_t input_dim, std::size_t hidden, std::size_t num_layers,
                        std::size_t output_dim = 0 /* 0: same as input */);

// Every weight uniform in [-1/sqrt(H), 1/sqrt(H)], drawn in checkpoint
// order from a seed-keyed stream.
StackedLstmParams init_params(std::size_t input_dim, std::size_t hidden,
                              std::size_t num_layers, std::uint64_t seed,
                              double dropout_rate = 0.2);

// Bernoulli keep masks scaled by 1/(1-p), one per dropout site: each
// layer's input and the post-ReLU head input. Row b (one sequence) is
// drawn from substream (seed, b) and reused at every time step.
struct DropoutMasks {
    std::vector<Matrix> layer_input;  // per layer, B x D_in(layer)
    Matrix head_input;                // B x H
    double rate = 0.0;

    bool active() const { return !layer_input.empty(); }
};

DropoutMasks sample_dropout_masks(const StackedLstmParams& params, std::size_t batch_size,
                                  std::uint64_t seed);

// Everything backward needs, captured per time step for the whole batch.
struct LayerCache {
    std::vector<Matrix> x;       // post-dropout layer input, B x D_in
    std::vector<Matrix> gates;   // post-nonlinearity [i f g o], B x 4H
    std::vector<Matrix> c;       // B x H
    std::vector<Matrix> tanh_c;  // B x H
    std::vector<Matrix> h;       // B x H
};
struct ForwardCache {
    std::vector<LayerCache> layers;
    std::vector<Matrix> head_in;  // post-ReLU, post-dropout, B x H
    std::vector<std::size_t> lengths;
    DropoutMasks masks;  // copy of the masks used (inactive if none)
};

// Per step and layer: x -> [mask] -> LSTM -> ... -> ReLU -> [mask] -> head.
// Padded steps are computed but carry no gradient once the loss masks them.
Tensor3 forward(const Tensor3& inputs, const std::vector<std::size_t>& lengths,
                const StackedLstmParams& params, const DropoutMasks* masks = nullptr,
                ForwardCache* cache = nullptr);
Tensor3 forward(const Batch& batch, const StackedLstmParams& params,
                const DropoutMasks* masks = nullptr, ForwardCache* cache = nullptr);

// Exact BPTT through the head, dropout sites, gates and states.
Gradients backward(const ForwardCache& cache, const Tensor3& d_predictions,
                   const StackedLstmParams& params);

// Single-cell step, exposed for oracle tests.
struct CellStep {
    std::vector<double> h;
    std::vector<double> c;
};
CellStep lstm_cell_forward(const std::vector<double>& x, const std::vector<double>& h,
                           const std::vector<double>& c, const LstmLayerParams& p);

}  // namespace cdmlstm
