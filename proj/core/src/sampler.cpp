#include "unicell/sampler.hpp"

#include "unicell/counting.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace unicell {

std::uint64_t RandomSource::below(std::uint64_t bound) {
    assert(bound >= 1);
    if (bound == 1) return 0;
    // smallest all-ones mask covering bound-1
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    std::uint64_t r;
    do {
        r = next_u64() & mask;
    } while (r >= bound);
    return r;
}

ExactInt RandomSource::below(const ExactInt& bound) {
    assert(bound >= 1);
    if (bound == 1) return 0;
    unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
    unsigned words = (bits + 63) / 64;
    ExactInt r;
    do {
        r = 0;
        for (unsigned w = 0; w < words; w++) {
            r <<= 64;
            r |= ExactInt(next_u64());
        }
        r >>= words * 64 - bits;
    } while (r >= bound);
    return r;
}

UnicellularMap sample_plane_tree(int n, RandomSource& rng) {
    if (n < 1) throw std::invalid_argument("sample_plane_tree: n must be >= 1");

    // n up-steps (+1) and n+1 down-steps (-1), shuffled uniformly.
    std::vector<int> step(2 * n + 1, -1);
    for (int i = 0; i < n; i++) step[i] = +1;
    for (int i = 2 * n; i > 0; i--) {
        std::uint64_t j = rng.below((std::uint64_t)i + 1);
        std::swap(step[i], step[j]);
    }

    // Cycle lemma: total sum is -1, so exactly one rotation keeps every
    // proper prefix sum nonnegative — the one starting after the position
    // where the running sum first attains its minimum.
    int sum = 0, min_sum = 1, start = 0;
    for (int i = 0; i < 2 * n + 1; i++) {
        sum += step[i];
        if (sum < min_sum) {
            min_sum = sum;
            start = i + 1;
        }
    }

    // Read the rotated word (its last letter is the closing down-step of the
    // root; dropping it leaves a balanced word of length 2n) and pair each
    // up-step with its matching down-step: those pairs are alpha.
    std::vector<int> alpha(2 * n);
    std::vector<int> stack;
    for (int i = 0; i < 2 * n; i++) {
        if (step[(start + i) % (2 * n + 1)] == +1) {
            stack.push_back(i);
        } else {
            int o = stack.back();
            stack.pop_back();
            alpha[o] = i;
            alpha[i] = o;
        }
    }
    assert(stack.empty());

    std::vector<int> sigma(2 * n);
    for (int h = 0; h < 2 * n; h++) sigma[h] = alpha[(h + 1) % (2 * n)];
    UnicellularMap t = build_map(n, Permutation(std::move(alpha)), Permutation(std::move(sigma)), 0);
    assert(genus(t) == 0);
    return t;
}

MarkedTrisection sample_marked(int g, int n, RandomSource& rng) {
    if (g < 1) throw std::invalid_argument("sample_marked: g must be >= 1");
    if (n + 1 - 2 * g < 1) throw MapError(Errc::GenusTooLarge);

    // Branch on the intermediate genus p with weight C(n+1-2p, 2g-2p+1)·ε_p(n).
    ExactInt total = ExactInt(2 * g) * epsilon_identity(g, n);
    ExactInt draw = rng.below(total);
    int p = 0;
    ExactInt cum = 0;
    for (;; p++) {
        assert(p < g);
        cum += binomial(n + 1 - 2 * p, 2 * (g - p) + 1) * epsilon_identity(p, n);
        if (draw < cum) break;
    }

    UnicellularMap base = (p == 0) ? sample_plane_tree(n, rng) : sample_map(p, n, rng);

    // 2g-2p+1 distinct vertices, uniformly: partial Fisher-Yates over the
    // n+1-2p vertex minima.
    int k = 2 * (g - p) + 1;
    std::vector<int> minima = vertex_minima(base);
    assert((int)minima.size() == n + 1 - 2 * p);
    for (int i = 0; i < k; i++) {
        std::uint64_t j = i + rng.below((std::uint64_t)(minima.size() - i));
        std::swap(minima[i], minima[j]);
    }
    minima.resize(k);

    MarkedTrisection mt = lambda(MarkedVertices{std::move(base), std::move(minima)});
    assert(genus(mt.map) == g);
    return mt;
}

UnicellularMap sample_map(int g, int n, RandomSource& rng) {
    if (g < 0 || n < 1) throw std::invalid_argument("sample_map: need g >= 0, n >= 1");
    if (n + 1 - 2 * g < 1) throw MapError(Errc::GenusTooLarge);
    if (g == 0) return sample_plane_tree(n, rng);
    return sample_marked(g, n, rng).map;
}

} // namespace unicell
