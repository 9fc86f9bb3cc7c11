#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "helpers.hpp"
#include "unicell/map.hpp"

#include <doctest.h>

using namespace unicell;

TEST_CASE("single edge is the smallest valid map") {
    UnicellularMap m = build_map(1, Permutation({1, 0}), Permutation({0, 1}), 0);
    CHECK(m.half_edges() == 2);
    CHECK(vertex_count(m) == 2);
    CHECK(genus(m) == 0);
    CHECK(serialize(m) == "U 1 r0 a:1,0 s:0,1");
}

TEST_CASE("construction rejects malformed input") {
    CHECK(errc_of([] { build_map(0, Permutation(std::vector<int>{}), Permutation(std::vector<int>{}), 0); }) ==
          Errc::ParseError);
    // alpha with a fixed point
    CHECK(errc_of([] { build_map(1, Permutation({0, 1}), Permutation({0, 1}), 0); }) ==
          Errc::NotInvolution);
    // alpha not an involution
    CHECK(errc_of([] {
              build_map(2, Permutation({1, 2, 3, 0}), Permutation({0, 1, 2, 3}), 0);
          }) == Errc::NotInvolution);
    // sigma not a bijection
    CHECK(errc_of([] { build_map(1, Permutation({1, 0}), Permutation({0, 0}), 0); }) ==
          Errc::NotBijection);
    // wrong array length
    CHECK(errc_of([] { build_map(2, Permutation({1, 0}), Permutation({0, 1}), 0); }) ==
          Errc::NotBijection);
    // root outside the half-edge range
    CHECK(errc_of([] { build_map(1, Permutation({1, 0}), Permutation({0, 1}), 2); }) ==
          Errc::ParseError);
    // sigma = alpha makes gamma the identity: one face per half-edge
    CHECK(errc_of([] { build_map(1, Permutation({1, 0}), Permutation({1, 0}), 0); }) ==
          Errc::MultiFace);
}

TEST_CASE("tour ranks walk alpha∘sigma from the root") {
    UnicellularMap path = deserialize(kPathTree);
    TourRank r = tour_rank(path);
    CHECK(r.rank == std::vector<int>{0, 1, 2, 3});

    UnicellularMap torus = deserialize(kTorus);
    TourRank rt = tour_rank(torus);
    CHECK(rt.rank == std::vector<int>{0, 2, 1, 3});

    // re-rooting shifts every rank by the same offset
    UnicellularMap shifted = torus;
    shifted.root = 2;
    TourRank rs = tour_rank(shifted);
    for (int h = 0; h < 4; h++) CHECK(rs[h] == (rt[h] + 3) % 4);
}

TEST_CASE("vertices are sigma cycles keyed by their rank-minimal half-edge") {
    UnicellularMap path = deserialize(kPathTree);
    CHECK(vertex_of(path, 1) == std::vector<int>{1, 3});
    CHECK(vertex_of(path, 3) == std::vector<int>{3, 1});
    CHECK(min_halfedge(path, 3) == 1);
    CHECK(vertex_minima(path) == std::vector<int>{0, 1, 2});

    // star tree: minima come out in tour-rank order, not numeric order
    UnicellularMap star = deserialize(kStarTree);
    CHECK(vertex_minima(star) == std::vector<int>{0, 3, 1});

    UnicellularMap torus = deserialize(kTorus);
    CHECK(vertex_of(torus, 0) == std::vector<int>{0, 3, 1, 2});
    CHECK(vertex_minima(torus) == std::vector<int>{0});
}

TEST_CASE("genus comes from the Euler relation v = n+1-2g") {
    CHECK(genus(deserialize(kPathTree)) == 0);
    CHECK(genus(deserialize(kStarTree)) == 0);
    CHECK(genus(deserialize(kTorus)) == 1);
    CHECK(genus(deserialize(kPsiBase)) == 1);
    CHECK(genus(deserialize(kPsiGlued)) == 2);
    CHECK(vertex_count(deserialize(kPsiGlued)) == 1);
}

TEST_CASE("canonical form relabels by tour rank and forgets original names") {
    UnicellularMap torus = deserialize(kTorus);
    UnicellularMap c = canonicalize(torus);
    CHECK(serialize(c) == "U 2 r0 a:2,3,0,1 s:3,0,1,2");
    CHECK(canonicalize(c) == c);
    CHECK(serialize_canonical(torus) == "Uc 2 p:0-2,1-3");

    // a relabeled copy (conjugate by h -> pi[h], root moved along) canonicalizes
    // to the same map
    UnicellularMap moved = build_map(2, Permutation({2, 3, 0, 1}), Permutation({3, 0, 1, 2}), 2);
    CHECK(canonicalize(moved) == c);
}

TEST_CASE("map lines round trip through text") {
    for (const std::string& line : {kPathTree, kStarTree, kTorus, kPsiBase, kPsiGlued})
        CHECK(serialize(deserialize(line)) == line);

    // the short form stores alpha only; sigma is implied by the canonical tour
    UnicellularMap c = deserialize("Uc 2 p:0-2,1-3");
    CHECK(serialize(c) == "U 2 r0 a:2,3,0,1 s:3,0,1,2");
    CHECK(serialize_canonical(c) == "Uc 2 p:0-2,1-3");
}

TEST_CASE("parser rejects damaged lines") {
    for (const char* line : {
             "",                                  // empty
             "X 2 r0 a:1,0,3,2 s:0,3,2,1",       // unknown prefix
             "U 2 a:1,0,3,2 s:0,3,2,1",          // missing root
             "U 2 r0 a:1,0,3 s:0,3,2,1",         // short image list
             "U 2 r0 a:1,0,3,2 s:0,3,2,x",       // non-numeric
             "U 2 r0 a:1,0,3,2 s:0,3,2,1 extra", // trailing garbage
             "Uc 2 p:0-2",                       // wrong pair count
             "Uc 2 p:0-2,3-1",                   // pair not increasing
             "Uc 2 p:0-2,1-2",                   // half-edge reused
         })
        CHECK(errc_of([&] { (void)deserialize(line); }) == Errc::ParseError);

    // labeled lines need the labeled entry point and vice versa
    CHECK(errc_of([] { (void)deserialize(kPathTree + " l:0,1,2"); }) == Errc::ParseError);
    CHECK(errc_of([] { (void)deserialize_labeled(kPathTree); }) == Errc::ParseError);
}

TEST_CASE("labels ride along in vertex-min order and are validated") {
    LabeledUnicellularMap lm = deserialize_labeled(kPathTree + " l:0,1,2");
    CHECK(lm.labels == std::vector<int>{0, 1, 2});
    CHECK(serialize_labeled(lm) == kPathTree + " l:0,1,2");

    // adjacent labels may also step down or stay level
    CHECK_NOTHROW(deserialize_labeled(kPathTree + " l:0,1,0"));
    CHECK_NOTHROW(deserialize_labeled("U 1 r0 a:1,0 s:0,1 l:0,-1"));

    CHECK(errc_of([] { (void)deserialize_labeled(kPathTree + " l:1,0,1"); }) ==
          Errc::RootLabelNonzero);
    CHECK(errc_of([] { (void)deserialize_labeled(kPathTree + " l:0,2,0"); }) ==
          Errc::LabelJump);
    CHECK(errc_of([] { (void)deserialize_labeled(kPathTree + " l:0,1"); }) == Errc::ParseError);

    // labels attach to vertices in rank order of their minima (star tree:
    // vertex minima are 0, 3, 1)
    LabeledUnicellularMap star = deserialize_labeled(kStarTree + " l:0,1,1");
    CHECK_NOTHROW(validate_labels(star));
}
