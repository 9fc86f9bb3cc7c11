#ifndef UNICELL_ORACLE_HPP
#define UNICELL_ORACLE_HPP

#include "unicell/exact.hpp"
#include "unicell/map.hpp"

#include <array>
#include <functional>
#include <map>
#include <vector>

namespace unicell {

/* Ground truth by exhaustion. Fixing the face to (0,1,...,2n-1) with root 0
   makes rooted one-face maps exactly the fixed-point-free involutions alpha
   on 0..2n-1 (sigma = alpha∘gamma): each map is visited once, no isomorphism
   testing, (2n-1)!! visits total. */

using MapVisitor = std::function<void(const UnicellularMap&)>;

/* Enumeration is refused above a desk-scale bound: 8 by default (2,027,025
   maps), overridable through the UNICELL_ORACLE_MAX_EDGES environment
   variable. */
int oracle_size_bound();

long long enumerate_maps(int n, const MapVisitor& visit);

/* Same enumeration restricted to one shard: the first pairing decision joins
   half-edge 0 to shard+1, so shards 0..2n-2 partition the full run. */
long long enumerate_maps_shard(int n, int shard, const MapVisitor& visit);

struct GenusCensus {
    int n = 0;
    std::vector<ExactInt> counts; // counts[g]
    ExactInt total() const {
        ExactInt t = 0;
        for (const ExactInt& c : counts) t += c;
        return t;
    }
};

/* threads <= 1 runs single-pass; otherwise shards are distributed over that
   many workers and merged. */
GenusCensus census(int n, int threads = 1);

/* Maps whose vertices 2-color with the root vertex white and every edge
   bichromatic, keyed by (genus, white count, black count). */
std::map<std::array<int, 3>, ExactInt> bipartite_census(int n);

/* Maps with all vertex degrees in {1,3}, by genus. */
std::vector<ExactInt> precubic_census(int n);

struct TrisectionTally {
    ExactInt maps = 0;
    ExactInt type_i = 0;
    ExactInt type_ii = 0;
};

/* Per-genus trisection statistics. Throws std::logic_error if any map does
   not have exactly 2g trisections and n+1 down-steps, or if a genus-1 map
   shows a type-II trisection — none of which can happen. */
std::vector<TrisectionTally> trisection_census(int n);

} // namespace unicell

#endif
