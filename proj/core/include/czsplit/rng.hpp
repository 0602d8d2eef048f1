#ifndef CZSPLIT_RNG_HPP
#define CZSPLIT_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace czsplit {

/// Deterministic random source. All randomized operations take one of
/// these (or a seed) so that identical seeds give identical runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform in [0, n), n >= 1, by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % n;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = (std::size_t)below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

} // namespace czsplit

#endif
