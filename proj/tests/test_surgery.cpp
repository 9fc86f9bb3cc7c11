#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "helpers.hpp"
#include "unicell/map.hpp"
#include "unicell/oracle.hpp"
#include "unicell/surgery.hpp"
#include "unicell/trisection.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>

using namespace unicell;

TEST_CASE("gluing three vertices merges their rotations around the triple") {
    UnicellularMap path = deserialize(kPathTree);
    UnicellularMap glued = glue3(path, 0, 1, 2);
    CHECK(serialize(glued) == kTorus);
    CHECK(genus(glued) == 1);

    // the star tree glues to the same one-vertex map
    UnicellularMap star = deserialize(kStarTree);
    CHECK(serialize(glue3(star, 0, 3, 1)) == kTorus);
}

TEST_CASE("gluing validates rank order and vertex distinctness") {
    UnicellularMap path = deserialize(kPathTree);
    CHECK(errc_of([&] { glue3(path, 1, 0, 2); }) == Errc::BadOrder);
    CHECK(errc_of([&] { glue3(path, 0, 1, 3); }) == Errc::SameVertex);
}

TEST_CASE("slicing validates the intertwined precondition") {
    UnicellularMap path = deserialize(kPathTree);
    UnicellularMap torus = deserialize(kTorus);
    CHECK(errc_of([&] { slice3(path, 0, 1, 2); }) == Errc::NotSameVertex);
    CHECK(errc_of([&] { slice3(torus, 0, 0, 1); }) == Errc::NotIntertwined);
    // wrong rotation order: from 0 the rotation meets 3 before 1
    CHECK(errc_of([&] { slice3(torus, 0, 1, 3); }) == Errc::NotIntertwined);
    // rotation order fine but the face visits the triple in the same order
    UnicellularMap g2 = deserialize(kPsiGlued);
    CHECK(errc_of([&] { slice3(g2, 4, 7, 1); }) == Errc::NotIntertwined);
}

TEST_CASE("plane tree vertices have no intertwined triples") {
    for (int n = 3; n <= 4; n++) {
        enumerate_maps(n, [](const UnicellularMap& m) {
            if (genus(m) != 0) return;
            for (int mn : vertex_minima(m)) {
                std::vector<int> rot = vertex_of(m, mn);
                for (size_t i = 0; i < rot.size(); i++)
                    for (size_t j = i + 1; j < rot.size(); j++)
                        for (size_t k = j + 1; k < rot.size(); k++)
                            CHECK(errc_of([&] { slice3(m, rot[i], rot[j], rot[k]); }) ==
                                  Errc::NotIntertwined);
            }
        });
    }
}

TEST_CASE("slice undoes glue on the 2-edge example") {
    UnicellularMap torus = deserialize(kTorus);
    CHECK(serialize(slice3(torus, 0, 1, 2)) == kPathTree);
    CHECK(genus(slice3(torus, 0, 1, 2)) == 0);
}

/* The face of a glued map is an exact block rearrangement: the tour
   (a1 K1 a2 K2 a3 K3) becomes (a1 K2 a3 K1 a2 K3). */
TEST_CASE("face of a glued map is the stated block rearrangement") {
    for (int n = 1; n <= 5; n++) {
        enumerate_maps(n, [&](const UnicellularMap& m) {
            TourRank rank = tour_rank(m);
            const int H = m.half_edges();
            std::vector<int> vmin(H), tour(H);
            for (int h = 0; h < H; h++) {
                vmin[h] = min_halfedge(m, rank, h);
                tour[rank[h]] = h;
            }
            for (int i = 0; i < H; i++)
                for (int j = i + 1; j < H; j++) {
                    if (vmin[tour[i]] == vmin[tour[j]]) continue;
                    for (int k = j + 1; k < H; k++) {
                        int a1 = tour[i], a2 = tour[j], a3 = tour[k];
                        if (vmin[a3] == vmin[a1] || vmin[a3] == vmin[a2]) continue;

                        std::vector<int> expect;
                        expect.push_back(a1);
                        for (int t = j + 1; t < k; t++) expect.push_back(tour[t]);
                        expect.push_back(a3);
                        for (int t = i + 1; t < j; t++) expect.push_back(tour[t]);
                        expect.push_back(a2);
                        for (int t = k + 1; t < H; t++) expect.push_back(tour[t]);
                        for (int t = 0; t < i; t++) expect.push_back(tour[t]);

                        UnicellularMap glued = glue3(m, a1, a2, a3);
                        std::vector<int> got;
                        int h = a1;
                        do {
                            got.push_back(h);
                            h = glued.alpha(glued.sigma(h));
                        } while (h != a1);
                        REQUIRE(got == expect);
                    }
                }
        });
    }
}

/* Surgery never disturbs the part of the tour below the triple: ranks under
   the lowest half-edge stay exact, and the relative order of everything under
   the middle one is preserved. Checked for gluing and slicing. */
TEST_CASE("surgery keeps low ranks frozen and low orders stable") {
    auto check_pair = [](const UnicellularMap& before, const UnicellularMap& after, int lo,
                         int mid) {
        TourRank rb = tour_rank(before), ra = tour_rank(after);
        const int H = before.half_edges();
        std::vector<int> low_before, low_after;
        for (int h = 0; h < H; h++) {
            if (rb[h] < rb[lo]) CHECK(ra[h] == rb[h]);
            if (rb[h] < rb[mid]) {
                low_before.push_back(h);
                low_after.push_back(h);
            }
        }
        std::sort(low_before.begin(), low_before.end(),
                  [&](int x, int y) { return rb[x] < rb[y]; });
        std::sort(low_after.begin(), low_after.end(),
                  [&](int x, int y) { return ra[x] < ra[y]; });
        CHECK(low_before == low_after);
    };

    for (int n = 1; n <= 4; n++) {
        enumerate_maps(n, [&](const UnicellularMap& m) {
            TourRank rank = tour_rank(m);
            const int H = m.half_edges();
            std::vector<int> vmin(H);
            for (int h = 0; h < H; h++) vmin[h] = min_halfedge(m, rank, h);

            for (int a1 = 0; a1 < H; a1++)
                for (int a2 = 0; a2 < H; a2++)
                    for (int a3 = 0; a3 < H; a3++) {
                        if (!(rank[a1] < rank[a2] && rank[a2] < rank[a3])) continue;
                        if (vmin[a1] == vmin[a2] || vmin[a1] == vmin[a3] ||
                            vmin[a2] == vmin[a3])
                            continue;
                        check_pair(m, glue3(m, a1, a2, a3), a1, a2);
                    }

            for (int mn : vertex_minima(m, rank)) {
                std::vector<int> rot = vertex_of(m, mn);
                for (size_t i = 0; i < rot.size(); i++)
                    for (size_t j = i + 1; j < rot.size(); j++)
                        for (size_t k = j + 1; k < rot.size(); k++) {
                            UnicellularMap cut;
                            try {
                                cut = slice3(m, rot[i], rot[j], rot[k]);
                            } catch (const MapError&) {
                                continue; // not intertwined
                            }
                            int t[3] = {rot[i], rot[j], rot[k]};
                            std::sort(t, t + 3,
                                      [&](int x, int y) { return rank[x] < rank[y]; });
                            check_pair(m, cut, t[0], t[1]);
                        }
            }
        });
    }
}

TEST_CASE("phi plants a type-I trisection at the merged vertex") {
    UnicellularMap path = deserialize(kPathTree);
    MarkedTrisection mt = phi(path, 0, 1, 2);
    CHECK(serialize(mt.map) == kTorus);
    CHECK(mt.tau == 1);

    UnicellularMap star = deserialize(kStarTree);
    MarkedTrisection ms = phi(star, 0, 3, 1);
    CHECK(serialize(ms.map) == kTorus);
    CHECK(ms.tau == 3);

    // vertices may be named by any of their half-edges
    CHECK(phi(star, 2, 3, 1) == ms);
    CHECK(phi(path, 0, 3, 2) == mt);
}

TEST_CASE("phi_inv recovers the three marked vertices") {
    MarkedVertices back = phi_inv(MarkedTrisection{deserialize(kTorus), 1});
    CHECK(serialize(back.map) == kPathTree);
    CHECK(back.marks == std::vector<int>{0, 1, 2});

    MarkedVertices star = phi_inv(MarkedTrisection{deserialize(kTorus), 3});
    CHECK(serialize(star.map) == kStarTree);
    CHECK(star.marks == std::vector<int>{0, 3, 1});

    CHECK(errc_of([] { phi_inv(MarkedTrisection{deserialize(kPsiGlued), 5}); }) ==
          Errc::WrongType);
}

TEST_CASE("psi plants a type-II trisection") {
    PsiInput in{deserialize(kPsiBase), 0, 1, 5};
    MarkedTrisection mt = psi(in);
    CHECK(serialize(mt.map) == kPsiGlued);
    CHECK(mt.tau == 5);
    CHECK(genus(mt.map) == 2);
    CHECK(trisection_frame(mt.map, mt.tau).kind == TrisectionKind::TypeII);

    CHECK(errc_of([&] { psi(PsiInput{in.map, 1, 0, 5}); }) == Errc::OrderViolated);
    CHECK(errc_of([&] { psi(PsiInput{in.map, 0, 1, 0}); }) == Errc::NotATrisection);
}

TEST_CASE("psi_inv returns the two vertices and the surviving trisection") {
    PsiInput back = psi_inv(MarkedTrisection{deserialize(kPsiGlued), 5});
    CHECK(serialize(back.map) == kPsiBase);
    CHECK(back.v1 == 0);
    CHECK(back.v2 == 1);
    CHECK(back.tau == 5);

    CHECK(errc_of([] { psi_inv(MarkedTrisection{deserialize(kTorus), 1}); }) ==
          Errc::WrongType);
}

TEST_CASE("lambda composes phi then psi down the mark list") {
    UnicellularMap path = deserialize(kPathTree);
    CHECK(lambda(MarkedVertices{path, {0, 1, 2}}) == phi(path, 0, 1, 2));

    // five marks: one gluing of three, then one of two
    MarkedTrisection mt = lambda(MarkedVertices{deserialize(kXiTree), {0, 1, 2, 5, 3}});
    CHECK(serialize(mt.map) == kPsiGlued);
    CHECK(mt.tau == 5);

    CHECK(errc_of([&] { lambda(MarkedVertices{path, {0, 1}}); }) == Errc::EvenMarks);
    CHECK(errc_of([&] { lambda(MarkedVertices{path, {0}}); }) == Errc::EvenMarks);
    CHECK(errc_of([&] { lambda(MarkedVertices{path, {0, 1, 3}}); }) == Errc::SameVertex);
}

TEST_CASE("xi unwinds to rank-sorted marks") {
    MarkedVertices tri = xi(MarkedTrisection{deserialize(kTorus), 1});
    CHECK(serialize(tri.map) == kPathTree);
    CHECK(tri.marks == std::vector<int>{0, 1, 2});

    // genus-2 fixture: one type-II opening then one type-I opening
    MarkedVertices five = xi(MarkedTrisection{deserialize(kPsiGlued), 5});
    CHECK(serialize(five.map) == kXiTree);
    CHECK(five.marks == std::vector<int>{0, 1, 2, 5, 3});
    TourRank rank = tour_rank(five.map);
    for (size_t i = 1; i < five.marks.size(); i++)
        CHECK(rank[five.marks[i - 1]] < rank[five.marks[i]]);
}

/* |marked triple sets of genus g| = |type-I marked trisections of genus g+1|
   and likewise for pairs-plus-trisection inputs against type II. */
TEST_CASE("marked-domain sizes match marked-trisection counts") {
    for (int n = 1; n <= 5; n++) {
        std::map<int, long long> u3, pairs, d1, d2;
        enumerate_maps(n, [&](const UnicellularMap& m) {
            int g = genus(m);
            TourRank rank = tour_rank(m);
            std::vector<int> minima = vertex_minima(m, rank);
            long long v = (long long)minima.size();
            u3[g] += v * (v - 1) * (v - 2) / 6;
            for (int tau : trisections(m)) {
                TrisectionInfo f = trisection_frame(m, rank, tau);
                (f.kind == TrisectionKind::TypeI ? d1 : d2)[g]++;
                long long below = 0;
                int tv = min_halfedge(m, rank, tau);
                for (int mn : minima)
                    if (rank[mn] < rank[tv]) below++;
                pairs[g] += below * (below - 1) / 2;
            }
        });
        for (int g = 0; g <= (n + 1) / 2; g++) {
            CHECK(d1[g + 1] == u3[g]);
            CHECK(d2[g + 1] == pairs[g]);
        }
    }
}

TEST_CASE("labeled gluing transports the shared label") {
    LabeledUnicellularMap lm = deserialize_labeled(kPathTree + " l:0,0,0");
    LabeledMarkedTrisection out = lambda_labeled(lm, {0, 1, 2});
    CHECK(serialize_labeled(out.map) == kTorus + " l:0");
    CHECK(out.tau == 1);

    LabeledUnicellularMap mixed = deserialize_labeled(kPathTree + " l:0,1,0");
    CHECK(errc_of([&] { lambda_labeled(mixed, {0, 1, 2}); }) == Errc::LabelMismatch);
}

TEST_CASE("labeled gluing keeps label validity on all small trees") {
    for (int n = 2; n <= 4; n++) {
        enumerate_maps(n, [](const UnicellularMap& m) {
            if (genus(m) != 0) return;
            TourRank rank = tour_rank(m);
            std::vector<int> minima = vertex_minima(m, rank);
            const int v = (int)minima.size();

            // label every vertex with its graph distance from the root vertex
            std::map<int, int> vid;
            for (int i = 0; i < v; i++) vid[minima[i]] = i;
            std::vector<int> dist(v, -1);
            std::queue<int> bfs;
            dist[vid[min_halfedge(m, rank, m.root)]] = 0;
            bfs.push(minima[vid[min_halfedge(m, rank, m.root)]]);
            while (!bfs.empty()) {
                int mn = bfs.front();
                bfs.pop();
                for (int h : vertex_of(m, mn)) {
                    int other = min_halfedge(m, rank, m.alpha(h));
                    if (dist[vid[other]] == -1) {
                        dist[vid[other]] = dist[vid[mn]] + 1;
                        bfs.push(other);
                    }
                }
            }
            LabeledUnicellularMap lm{m, dist};
            validate_labels(lm);

            // glue every equal-label vertex triple and re-validate
            for (int i = 0; i < v; i++)
                for (int j = i + 1; j < v; j++)
                    for (int k = j + 1; k < v; k++) {
                        if (dist[i] != dist[j] || dist[j] != dist[k]) continue;
                        LabeledMarkedTrisection out =
                            lambda_labeled(lm, {minima[i], minima[j], minima[k]});
                        CHECK_NOTHROW(validate_labels(out.map));
                        CHECK(genus(out.map.map) == 1);
                    }
        });
    }
}
