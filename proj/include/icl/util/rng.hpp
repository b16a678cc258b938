#pragma once

#include <cstdint>
#include <random>

namespace icl {

/* Seeded generator whose draws do not depend on the standard library's
 * distribution implementations, so seeds reproduce across toolchains. */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /* Uniform integer in [lo, hi]. */
    long uniform(long lo, long hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do
            v = engine_();
        while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    /* Uniform nonzero integer in [-bound, bound]. */
    long nonzero(long bound)
    {
        long v;
        do
            v = uniform(-bound, bound);
        while (v == 0);
        return v;
    }

    /* Independent child stream, for splitting work deterministically. */
    Rng split() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ull); }

  private:
    std::mt19937_64 engine_;
};

} // namespace icl
