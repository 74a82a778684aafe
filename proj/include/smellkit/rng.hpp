#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace smellkit {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from a master seed and a stream index.
/// Used so that per-tree / per-fold / per-repeat RNG streams are fixed by
/// (master_seed, index) alone, independent of thread scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master;
    splitmix64(s);
    s ^= 0x9e3779b97f4a7c15ULL * (stream + 1);
    splitmix64(s);
    return splitmix64(s);
}

/// Deterministic RNG. The engine (std::mt19937_64) has a standard-fixed
/// output sequence and all variate mappings below are implemented here, so
/// identical seeds give identical draws on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1).
    double uniform_open() {
        double u = uniform();
        while (u == 0.0) u = uniform();
        return u;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    int index(int n) { return static_cast<int>(bounded(static_cast<std::uint64_t>(n))); }

    /// k distinct indices from [0, n), in draw order (partial Fisher-Yates).
    std::vector<int> sample_without_replacement(int n, int k) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        std::vector<int> out;
        out.reserve(k);
        for (int i = 0; i < k; ++i) {
            int j = i + index(n - i);
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

    /// n draws with replacement from [0, n): a bootstrap sample.
    std::vector<int> bootstrap(int n) {
        std::vector<int> out(n);
        for (int i = 0; i < n; ++i) out[i] = index(n);
        return out;
    }

    double normal() {
        // Box-Muller; fixed mapping keeps the stream platform-stable.
        double u1 = uniform_open();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace smellkit
