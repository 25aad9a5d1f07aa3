#pragma once

#include <cstdint>
#include <vector>

namespace cdmlstm {

// Explicitly coded generators so streams are bit-identical across platforms
// and standard libraries. xoshiro256** seeded through splitmix64.

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives a substream seed from (seed, a, b). Same inputs, same output.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0);

class Rng {
public:
    explicit Rng(std::uint64_t seed);
    Rng(std::uint64_t seed, std::uint64_t stream_a, std::uint64_t stream_b = 0);

    std::uint64_t next_u64();

    // [0, 1) with 53 random bits
    double uniform01();
    double uniform(double lo, double hi);

    // [0, n), unbiased via rejection
    std::uint64_t below(std::uint64_t n);

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t s_[4];
};

}  // namespace cdmlstm
