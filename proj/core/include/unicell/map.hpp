#ifndef UNICELL_MAP_HPP
#define UNICELL_MAP_HPP

#include "unicell/error.hpp"

#include <string>
#include <vector>

namespace unicell {

/* Half-edges are dense integers 0..2n-1. A permutation is stored as its image
   array: p(h) = images[h]. */
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> img) : images(std::move(img)) {}

    int operator()(int h) const { return images[h]; }
    int size() const { return (int)images.size(); }
    bool is_bijection() const;
    bool is_fixed_point_free_involution() const;
    Permutation inverse() const;
    bool operator==(const Permutation& o) const = default;
};

/* Rooted one-face map as a permutation triple. alpha pairs the two sides of
   each edge; sigma is the counterclockwise rotation around each vertex; the
   face permutation gamma = alpha∘sigma (sigma applied first) must be a single
   cycle of length 2n. Construct through build_map, which validates. */
struct UnicellularMap {
    int n = 0;
    Permutation alpha;
    Permutation sigma;
    int root = 0;

    int half_edges() const { return 2 * n; }
    bool operator==(const UnicellularMap& o) const = default;
};

/* Position of each half-edge along the face tour from the root:
   rank[root] = 0, rank[gamma(h)] = rank[h] + 1. */
struct TourRank {
    std::vector<int> rank;
    int operator[](int h) const { return rank[h]; }
};

struct LabeledUnicellularMap {
    UnicellularMap map;
    /* One label per vertex, listed in order of increasing vertex minimum
       (the same order serialization uses). */
    std::vector<int> labels;
    bool operator==(const LabeledUnicellularMap& o) const = default;
};

UnicellularMap build_map(int n, Permutation alpha, Permutation sigma, int root);

/* gamma = alpha∘sigma, the single face cycle. */
Permutation face(const UnicellularMap& m);

int vertex_count(const UnicellularMap& m);
int genus(const UnicellularMap& m);

TourRank tour_rank(const UnicellularMap& m);

/* The cycle of sigma through h, in rotation order starting at h. */
std::vector<int> vertex_of(const UnicellularMap& m, int h);

/* Minimal half-edge (under tour rank) of the vertex containing h. */
int min_halfedge(const UnicellularMap& m, int h);
int min_halfedge(const UnicellularMap& m, const TourRank& rank, int h);

/* All vertex minima, sorted by tour rank (so index 0 is the root vertex). */
std::vector<int> vertex_minima(const UnicellularMap& m);
std::vector<int> vertex_minima(const UnicellularMap& m, const TourRank& rank);

/* Relabel half-edges by tour rank: root becomes 0 and the face cycle becomes
   (0,1,...,2n-1). Two rooted maps are equal iff their canonical forms are
   identical, and the canonical form is determined by alpha alone. */
UnicellularMap canonicalize(const UnicellularMap& m);

/* Text format, one map per line:
     U <n> r<root> a:<2n images of alpha> s:<2n images of sigma>
   Canonical short form (root 0 and face (0..2n-1) implied):
     Uc <n> p:<n pairs i-alpha(i), i < alpha(i)>
   Labelled maps append " l:<labels in increasing-vertex-min order>". */
std::string serialize(const UnicellularMap& m);
std::string serialize_canonical(const UnicellularMap& m);
std::string serialize_labeled(const LabeledUnicellularMap& lm);
UnicellularMap deserialize(const std::string& line);
LabeledUnicellularMap deserialize_labeled(const std::string& line);

/* Root vertex labelled 0 and adjacent labels differing by at most 1.
   Throws MapError (RootLabelNonzero / LabelJump) when violated. */
void validate_labels(const LabeledUnicellularMap& lm);

} // namespace unicell

#endif
