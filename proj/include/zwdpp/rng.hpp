#pragma once

#include <cstdint>
#include <random>

namespace zwdpp {

// splitmix64; used to derive independent stream seeds from one master seed
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream) {
    SplitMix64 sm(master ^ (0xa0761d6478bd642fULL * (stream + 1)));
    sm.next();
    return sm.next();
}

// Deterministic generator; avoids std distributions so output is
// reproducible byte-for-byte across standard library versions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    double uniform() {  // [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = (~n + 1) % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t r = eng_();
            if (r >= threshold) return r % n;
        }
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace zwdpp
