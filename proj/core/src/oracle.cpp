#include "unicell/oracle.hpp"

#include "unicell/trisection.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace unicell {

int oracle_size_bound() {
    if (const char* env = std::getenv("UNICELL_ORACLE_MAX_EDGES")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 8;
}

namespace {

struct Enumerator {
    int n;
    std::vector<int> alpha;
    const MapVisitor& visit;
    long long count = 0;

    Enumerator(int n_, const MapVisitor& v) : n(n_), alpha(2 * n_, -1), visit(v) {}

    void emit() {
        const int H = 2 * n;
        std::vector<int> sigma(H);
        for (int h = 0; h < H; h++) sigma[h] = alpha[(h + 1) % H];
        visit(build_map(n, Permutation(alpha), Permutation(std::move(sigma)), 0));
        count++;
    }

    /* Pair the smallest unpaired half-edge with every larger unpaired one. */
    void rec(int from) {
        int i = from;
        while (i < 2 * n && alpha[i] != -1) i++;
        if (i == 2 * n) {
            emit();
            return;
        }
        for (int j = i + 1; j < 2 * n; j++) {
            if (alpha[j] != -1) continue;
            alpha[i] = j;
            alpha[j] = i;
            rec(i + 1);
            alpha[i] = -1;
            alpha[j] = -1;
        }
    }
};

void check_bound(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_maps: n must be >= 1");
    if (n > oracle_size_bound())
        throw MapError(Errc::SizeBound,
                       "edge count " + std::to_string(n) + " exceeds the brute-force bound " +
                           std::to_string(oracle_size_bound()) +
                           " (set UNICELL_ORACLE_MAX_EDGES to raise it)");
}

} // namespace

long long enumerate_maps(int n, const MapVisitor& visit) {
    check_bound(n);
    Enumerator e(n, visit);
    e.rec(0);
    return e.count;
}

long long enumerate_maps_shard(int n, int shard, const MapVisitor& visit) {
    check_bound(n);
    if (shard < 0 || shard >= 2 * n - 1)
        throw std::invalid_argument("enumerate_maps_shard: shard out of range");
    Enumerator e(n, visit);
    e.alpha[0] = shard + 1;
    e.alpha[shard + 1] = 0;
    e.rec(1);
    return e.count;
}

GenusCensus census(int n, int threads) {
    check_bound(n);
    GenusCensus c;
    c.n = n;
    c.counts.assign(n / 2 + 1, 0);

    if (threads <= 1) {
        enumerate_maps(n, [&](const UnicellularMap& m) { c.counts[genus(m)] += 1; });
        return c;
    }

    const int shards = 2 * n - 1;
    std::vector<std::vector<long long>> partial(shards, std::vector<long long>(n / 2 + 1, 0));
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(threads, shards); t++) {
        pool.emplace_back([&, t] {
            for (int s = t; s < shards; s += std::min(threads, shards)) {
                enumerate_maps_shard(n, s,
                                     [&](const UnicellularMap& m) { partial[s][genus(m)]++; });
            }
        });
    }
    for (auto& th : pool) th.join();
    for (int s = 0; s < shards; s++)
        for (size_t g = 0; g < partial[s].size(); g++) c.counts[g] += partial[s][g];
    return c;
}

std::map<std::array<int, 3>, ExactInt> bipartite_census(int n) {
    std::map<std::array<int, 3>, ExactInt> out;
    enumerate_maps(n, [&](const UnicellularMap& m) {
        // Vertices are identified by their minimal half-edge; the map is
        // connected (one face), so the 2-coloring from the root is unique if
        // it exists at all.
        TourRank rank = tour_rank(m);
        std::vector<int> vmin(m.half_edges());
        for (int h = 0; h < m.half_edges(); h++) vmin[h] = min_halfedge(m, rank, h);

        std::vector<int> color(m.half_edges(), -1); // by vertex min: 0 white, 1 black
        std::vector<int> stack = {vmin[m.root]};
        color[vmin[m.root]] = 0;
        bool ok = true;
        while (ok && !stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int h : vertex_of(m, v)) {
                int w = vmin[m.alpha(h)];
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) return;
        int white = 0, black = 0;
        for (int h = 0; h < m.half_edges(); h++)
            if (vmin[h] == h) (color[h] == 0 ? white : black)++;
        out[{genus(m), white, black}] += 1;
    });
    return out;
}

std::vector<ExactInt> precubic_census(int n) {
    std::vector<ExactInt> out(n / 2 + 1, 0);
    enumerate_maps(n, [&](const UnicellularMap& m) {
        std::vector<int> degree(m.half_edges(), 0);
        std::vector<int> vmin(m.half_edges());
        TourRank rank = tour_rank(m);
        for (int h = 0; h < m.half_edges(); h++) vmin[h] = min_halfedge(m, rank, h);
        for (int h = 0; h < m.half_edges(); h++) degree[vmin[h]]++;
        for (int h = 0; h < m.half_edges(); h++)
            if (vmin[h] == h && degree[h] != 1 && degree[h] != 3) return;
        out[genus(m)] += 1;
    });
    return out;
}

std::vector<TrisectionTally> trisection_census(int n) {
    std::vector<TrisectionTally> out(n / 2 + 1);
    enumerate_maps(n, [&](const UnicellularMap& m) {
        TourRank rank = tour_rank(m);
        int g = genus(m);
        int tri = 0, down = 0;
        for (int h = 0; h < m.half_edges(); h++) {
            StepKind k = step_kind(m, rank, h);
            if (k != StepKind::UpStep) down++;
            if (k == StepKind::Trisection) tri++;
        }
        if (tri != 2 * g || down != m.n + 1)
            throw std::logic_error("trisection lemma violated on " + serialize(m));

        TrisectionTally& t = out[g];
        t.maps += 1;
        for (int h = 0; h < m.half_edges(); h++) {
            if (step_kind(m, rank, h) != StepKind::Trisection) continue;
            TrisectionInfo f = trisection_frame(m, rank, h);
            if (f.kind == TrisectionKind::TypeI)
                t.type_i += 1;
            else {
                if (g == 1)
                    throw std::logic_error("type-II trisection in a genus-1 map: " + serialize(m));
                t.type_ii += 1;
            }
        }
    });
    return out;
}

} // namespace unicell
