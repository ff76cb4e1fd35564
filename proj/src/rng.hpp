#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace orthocover::detail {

// std::mt19937_64 has a fully specified output sequence; the distributions in
// <random> do not, so bounded draws and shuffles are done here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

    // First `count` entries become a uniform random sample without replacement.
    template <class T>
    void partial_shuffle(std::vector<T>& items, std::size_t count) {
        for (std::size_t i = 0; i < count && i < items.size(); ++i) {
            std::swap(items[i], items[i + below(items.size() - i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace orthocover::detail
