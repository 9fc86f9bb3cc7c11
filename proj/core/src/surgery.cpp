#include "unicell/surgery.hpp"

#include <algorithm>
#include <cassert>

namespace unicell {

namespace {

/* Cyclic order test inside one face/vertex cycle: starting from a and
   following ranks, do we meet b before c? All three must be distinct. */
bool meets_before(const TourRank& rank, int a, int b, int c) {
    // positions along the tour relative to a
    int n = (int)rank.rank.size();
    int pb = (rank[b] - rank[a] + n) % n;
    int pc = (rank[c] - rank[a] + n) % n;
    return pb < pc;
}

UnicellularMap rewire(const UnicellularMap& m, int a1, int a2, int a3, bool forward) {
    // forward: sigma' = sigma∘(a1 a2 a3); backward: sigma' = sigma∘(a1 a3 a2).
    std::vector<int> s = m.sigma.images;
    if (forward) {
        s[a1] = m.sigma(a2);
        s[a2] = m.sigma(a3);
        s[a3] = m.sigma(a1);
    } else {
        s[a1] = m.sigma(a3);
        s[a2] = m.sigma(a1);
        s[a3] = m.sigma(a2);
    }
    return build_map(m.n, m.alpha, Permutation(std::move(s)), m.root);
}

} // namespace

UnicellularMap glue3(const UnicellularMap& m, int a1, int a2, int a3) {
    TourRank rank = tour_rank(m);
    if (!(rank[a1] < rank[a2] && rank[a2] < rank[a3]))
        throw MapError(Errc::BadOrder);
    int m1 = min_halfedge(m, rank, a1);
    int m2 = min_halfedge(m, rank, a2);
    int m3 = min_halfedge(m, rank, a3);
    if (m1 == m2 || m1 == m3 || m2 == m3) throw MapError(Errc::SameVertex);

    UnicellularMap out = rewire(m, a1, a2, a3, /*forward=*/true);
    assert(genus(out) == genus(m) + 1);
    return out;
}

UnicellularMap slice3(const UnicellularMap& m, int a1, int a2, int a3) {
    if (a1 == a2 || a1 == a3 || a2 == a3)
        throw MapError(Errc::NotIntertwined, "triple must be three distinct half-edges");
    TourRank rank = tour_rank(m);
    int mn = min_halfedge(m, rank, a1);
    if (min_halfedge(m, rank, a2) != mn || min_halfedge(m, rank, a3) != mn)
        throw MapError(Errc::NotSameVertex);

    // Rotation cyclic order must be (a1,a2,a3): from a1, sigma reaches a2
    // before a3.
    int k = m.sigma(a1);
    while (k != a2 && k != a3) k = m.sigma(k);
    if (k != a2)
        throw MapError(Errc::NotIntertwined, "triple not in rotation order");

    // Intertwined: the face must visit them in the other cyclic order,
    // (a1,a3,a2).
    if (meets_before(rank, a1, a2, a3))
        throw MapError(Errc::NotIntertwined);

    UnicellularMap out = rewire(m, a1, a2, a3, /*forward=*/false);
    assert(genus(out) == genus(m) - 1);
    return out;
}

MarkedTrisection phi(const UnicellularMap& m, int v1, int v2, int v3) {
    TourRank rank = tour_rank(m);
    int a[3] = {min_halfedge(m, rank, v1), min_halfedge(m, rank, v2),
                min_halfedge(m, rank, v3)};
    std::sort(a, a + 3, [&](int x, int y) { return rank[x] < rank[y]; });

    UnicellularMap glued = glue3(m, a[0], a[1], a[2]);
    int tau = glued.sigma.inverse()(a[2]);
    assert(trisection_frame(glued, tau).kind == TrisectionKind::TypeI);
    return MarkedTrisection{std::move(glued), tau};
}

MarkedVertices phi_inv(const MarkedTrisection& mt) {
    TrisectionInfo f = trisection_frame(mt.map, mt.tau);
    if (f.kind != TrisectionKind::TypeI)
        throw MapError(Errc::WrongType, "phi_inv needs a type-I trisection");

    UnicellularMap sliced = slice3(mt.map, f.b1, f.b2, f.b3);
    // Type I means each frame half-edge is the minimum of its restored vertex.
    TourRank rank = tour_rank(sliced);
    assert(min_halfedge(sliced, rank, f.b1) == f.b1);
    assert(min_halfedge(sliced, rank, f.b2) == f.b2);
    assert(min_halfedge(sliced, rank, f.b3) == f.b3);
    std::vector<int> marks = {f.b1, f.b2, f.b3};
    std::sort(marks.begin(), marks.end(),
              [&](int x, int y) { return rank[x] < rank[y]; });
    return MarkedVertices{std::move(sliced), std::move(marks)};
}

MarkedTrisection psi(const PsiInput& in) {
    const UnicellularMap& m = in.map;
    TourRank rank = tour_rank(m);
    if (step_kind(m, rank, in.tau) != StepKind::Trisection)
        throw MapError(Errc::NotATrisection);
    int a1 = min_halfedge(m, rank, in.v1);
    int a2 = min_halfedge(m, rank, in.v2);
    int a3v = min_halfedge(m, rank, in.tau);
    if (!(rank[a1] < rank[a2] && rank[a2] < rank[a3v]))
        throw MapError(Errc::OrderViolated);

    // Glue at sigma(tau), not at the vertex minimum: this is what plants tau
    // as a type-II trisection of the result.
    UnicellularMap glued = glue3(m, a1, a2, m.sigma(in.tau));
    assert(trisection_frame(glued, in.tau).kind == TrisectionKind::TypeII);
    return MarkedTrisection{std::move(glued), in.tau};
}

PsiInput psi_inv(const MarkedTrisection& mt) {
    TrisectionInfo f = trisection_frame(mt.map, mt.tau);
    if (f.kind != TrisectionKind::TypeII)
        throw MapError(Errc::WrongType, "psi_inv needs a type-II trisection");

    UnicellularMap sliced = slice3(mt.map, f.b1, f.b2, f.b3);
    TourRank rank = tour_rank(sliced);
    assert(min_halfedge(sliced, rank, f.b1) == f.b1);
    assert(min_halfedge(sliced, rank, f.b2) == f.b2);
    assert(step_kind(sliced, rank, mt.tau) == StepKind::Trisection);
    assert(rank[f.b2] < rank[min_halfedge(sliced, rank, mt.tau)]);
    return PsiInput{std::move(sliced), f.b1, f.b2, mt.tau};
}

MarkedTrisection lambda(const MarkedVertices& mv) {
    if (mv.marks.size() % 2 == 0 || mv.marks.size() < 3)
        throw MapError(Errc::EvenMarks, "need an odd number (>= 3) of marked vertices");

    const UnicellularMap& m = mv.map;
    TourRank rank = tour_rank(m);
    std::vector<int> marks;
    for (int v : mv.marks) marks.push_back(min_halfedge(m, rank, v));
    std::sort(marks.begin(), marks.end(),
              [&](int x, int y) { return rank[x] < rank[y]; });
    for (size_t i = 1; i < marks.size(); i++)
        if (marks[i] == marks[i - 1])
            throw MapError(Errc::SameVertex, "marked vertices must be distinct");

    // Top three first, then pairs downward. Pending marks rank below each
    // active triple, so their minima and relative order survive every step.
    size_t top = marks.size();
    MarkedTrisection cur =
        phi(m, marks[top - 3], marks[top - 2], marks[top - 1]);
    top -= 3;
    while (top > 0) {
        cur = psi(PsiInput{std::move(cur.map), marks[top - 2], marks[top - 1], cur.tau});
        top -= 2;
    }
    return cur;
}

MarkedVertices xi(const MarkedTrisection& mt) {
    std::vector<int> marks;
    MarkedTrisection cur = mt;
    while (true) {
        TrisectionInfo f = trisection_frame(cur.map, cur.tau);
        if (f.kind == TrisectionKind::TypeII) {
            PsiInput in = psi_inv(cur);
            marks.push_back(in.v1);
            marks.push_back(in.v2);
            cur = MarkedTrisection{std::move(in.map), in.tau};
        } else {
            MarkedVertices last = phi_inv(cur);
            marks.insert(marks.end(), last.marks.begin(), last.marks.end());
            TourRank rank = tour_rank(last.map);
            std::sort(marks.begin(), marks.end(),
                      [&](int x, int y) { return rank[x] < rank[y]; });
            return MarkedVertices{std::move(last.map), std::move(marks)};
        }
    }
}

LabeledMarkedTrisection lambda_labeled(const LabeledUnicellularMap& lm,
                                       const std::vector<int>& marks) {
    const UnicellularMap& m = lm.map;
    TourRank rank = tour_rank(m);
    std::vector<int> minima = vertex_minima(m, rank);
    auto label_of = [&](int h) {
        int mn = min_halfedge(m, rank, h);
        for (size_t i = 0; i < minima.size(); i++)
            if (minima[i] == mn) return lm.labels[i];
        throw std::logic_error("vertex minimum not found");
    };

    int common = label_of(marks.at(0));
    for (int v : marks)
        if (label_of(v) != common) throw MapError(Errc::LabelMismatch);

    MarkedTrisection out = lambda(MarkedVertices{m, marks});

    // Rebuild the label list: unmarked vertices kept their minima; the merged
    // vertex's minimum is the lowest mark's minimum and inherits the shared
    // label.
    TourRank orank = tour_rank(out.map);
    std::vector<int> ominima = vertex_minima(out.map, orank);
    std::vector<int> labels;
    for (int mn : ominima) labels.push_back(label_of(mn));
    LabeledUnicellularMap olm{std::move(out.map), std::move(labels)};
    validate_labels(olm);
    return LabeledMarkedTrisection{std::move(olm), out.tau};
}

} // namespace unicell
