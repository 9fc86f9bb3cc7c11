#ifndef UNICELL_SAMPLER_HPP
#define UNICELL_SAMPLER_HPP

#include "unicell/exact.hpp"
#include "unicell/surgery.hpp"

#include <cstdint>
#include <random>

namespace unicell {

/* Seeded deterministic randomness. Bounded draws are masked rejection over
   raw 64-bit words (std::uniform_int_distribution is implementation-defined,
   which would break the same-seed-same-samples contract across toolchains). */
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /* Uniform in [0, bound); bound >= 1. */
    std::uint64_t below(std::uint64_t bound);
    ExactInt below(const ExactInt& bound);

private:
    std::mt19937_64 engine_;
};

/* Uniform over the Cat(n) rooted plane trees: shuffle n up-steps and n+1
   down-steps, take the unique rotation with all proper prefix sums
   nonnegative (cycle lemma), read the matched pairs as alpha. */
UnicellularMap sample_plane_tree(int n, RandomSource& rng);

/* Uniform over the ε_g(n) genus-g maps with n edges: pick the intermediate
   genus p with exact weight C(n+1-2p, 2g-2p+1)·ε_p(n) out of 2g·ε_g(n),
   sample a genus-p map, glue 2g-2p+1 uniformly chosen vertices, drop the
   trisection mark. Uniformity rides on the gluing being a bijection onto
   maps-with-a-marked-trisection and every genus-g map having exactly 2g
   trisections. */
UnicellularMap sample_map(int g, int n, RandomSource& rng);

/* Uniform over the 2g·ε_g(n) (map, trisection) pairs; g >= 1. */
MarkedTrisection sample_marked(int g, int n, RandomSource& rng);

} // namespace unicell

#endif
