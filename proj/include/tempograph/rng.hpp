#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tempograph {

// Thin wrapper around mt19937_64 with hand-rolled draws so that streams are
// stable across standard library implementations (std::uniform_int_distribution
// is not portable bit-for-bit).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform integer in [lo, hi], inclusive
    int uniform_int(int lo, int hi) {
        if (hi <= lo) return lo;
        std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        // rejection sampling to avoid modulo bias
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<int>(x % span);
    }

    double uniform_real() {
        return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0);
    }

    bool bernoulli(double p) { return uniform_real() < p; }

    // k distinct values from [0, n), order randomized
    std::vector<int> sample_without_replacement(int n, int k) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        if (k > n) k = n;
        for (int i = 0; i < k; ++i) {
            int j = uniform_int(i, n - 1);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            int j = uniform_int(0, i);
            std::swap(v[i], v[j]);
        }
    }

    // deterministic per-trial substream: master seed plus trial index
    static std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
        return master + trial;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace tempograph
