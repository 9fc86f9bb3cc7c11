#ifndef UNICELL_SURGERY_HPP
#define UNICELL_SURGERY_HPP

#include "unicell/map.hpp"
#include "unicell/trisection.hpp"

#include <vector>

namespace unicell {

/* A map with k distinct marked vertices, each named by its minimal half-edge.
   lambda requires k odd. */
struct MarkedVertices {
    UnicellularMap map;
    std::vector<int> marks;
    bool operator==(const MarkedVertices& o) const = default;
};

/* A map with one distinguished trisection. */
struct MarkedTrisection {
    UnicellularMap map;
    int tau;
    bool operator==(const MarkedTrisection& o) const = default;
};

/* Input of psi: two vertices and a trisection whose vertex minima are
   strictly increasing in tour rank: min(v1) < min(v2) < min(V(tau)). */
struct PsiInput {
    UnicellularMap map;
    int v1;
    int v2;
    int tau;
    bool operator==(const PsiInput& o) const = default;
};

/* Glue the three vertices of a1, a2, a3 into one. Requires
   rank(a1) < rank(a2) < rank(a3) and three distinct vertices. The merged
   rotation is (a1, rest of V(a2) after a2, a2, rest of V(a3) after a3, a3,
   rest of V(a1) after a1) — equivalently sigma' = sigma∘(a1 a2 a3). The
   result is again one-face with genus exactly one higher. */
UnicellularMap glue3(const UnicellularMap& m, int a1, int a2, int a3);

/* Inverse of glue3: split the common vertex of an intertwined triple
   (rotation cyclic order (a1,a2,a3), face cyclic order (a1,a3,a2)) into
   three, dropping the genus by one. Cyclic rotations of the argument triple
   are equivalent. */
UnicellularMap slice3(const UnicellularMap& m, int a1, int a2, int a3);

/* Glue three distinct vertices (named by any member half-edge) at their
   minima, rank-sorted. The returned trisection is the rotation predecessor
   of the largest glued minimum and always has type I. */
MarkedTrisection phi(const UnicellularMap& m, int v1, int v2, int v3);

/* Inverse of phi on type-I marked trisections: slice at the frame (b1,b2,b3);
   the three restored vertices have exactly b1, b2, b3 as minima. */
MarkedVertices phi_inv(const MarkedTrisection& mt);

/* Glue v1, v2 and the vertex of tau at (min v1, min v2, sigma(tau)); tau
   stays a trisection and acquires type II. */
MarkedTrisection psi(const PsiInput& in);

/* Inverse of psi on type-II marked trisections: slice at the frame; tau is
   still a trisection of the smaller map and the minima order constraint
   holds again. */
PsiInput psi_inv(const MarkedTrisection& mt);

/* Iterated gluing: sort the 2q+1 marks by rank of their minima, apply phi to
   the top three, then psi q-1 times, each consuming the two highest pending
   marks. Genus rises by exactly q; the returned trisection has type I iff
   q = 1. */
MarkedTrisection lambda(const MarkedVertices& mv);

/* Inverse of lambda: psi_inv while the trisection has type II, then phi_inv
   once. The collected marks come out sorted by rank of their minima. */
MarkedVertices xi(const MarkedTrisection& mt);

/* lambda restricted to marked vertices sharing one label; the merged vertex
   inherits it and the labelling stays valid. */
struct LabeledMarkedTrisection {
    LabeledUnicellularMap map;
    int tau;
};
LabeledMarkedTrisection lambda_labeled(const LabeledUnicellularMap& lm,
                                       const std::vector<int>& marks);

} // namespace unicell

#endif
