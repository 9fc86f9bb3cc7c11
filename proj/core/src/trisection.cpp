#include "unicell/trisection.hpp"

#include <algorithm>
#include <cassert>

namespace unicell {

StepKind step_kind(const UnicellularMap& m, const TourRank& rank, int h) {
    if (rank[h] < rank[m.sigma(h)]) return StepKind::UpStep;
    if (m.sigma(h) != min_halfedge(m, rank, h)) return StepKind::Trisection;
    return StepKind::DownStep;
}

StepKind step_kind(const UnicellularMap& m, int h) {
    return step_kind(m, tour_rank(m), h);
}

std::vector<int> trisections(const UnicellularMap& m) {
    TourRank rank = tour_rank(m);
    std::vector<int> out;
    for (int h = 0; h < m.half_edges(); h++)
        if (step_kind(m, rank, h) == StepKind::Trisection) out.push_back(h);
    std::sort(out.begin(), out.end(), [&](int a, int b) { return rank[a] < rank[b]; });
    return out;
}

TrisectionInfo trisection_frame(const UnicellularMap& m, const TourRank& rank, int tau) {
    if (step_kind(m, rank, tau) != StepKind::Trisection)
        throw MapError(Errc::NotATrisection);

    std::vector<int> v = vertex_of(m, tau); // rotation order from tau
    const int b1 = min_halfedge(m, rank, tau);
    const int b3 = m.sigma(tau);

    // Rebase rotation positions at b1 so "between" tests are plain comparisons.
    const int deg = (int)v.size();
    int off = 0;
    while (v[off] != b1) off++;
    std::vector<int> rot(deg); // rot[i] = i-th half-edge counting from b1
    for (int i = 0; i < deg; i++) rot[i] = v[(off + i) % deg];
    std::vector<int> pos(m.half_edges(), -1);
    for (int i = 0; i < deg; i++) pos[rot[i]] = i;

    // b2: rank-minimal among half-edges strictly between b1 and b3 in rotation
    // with rank above rank(b3). tau sits just before b3 and is a down-step, so
    // it always qualifies; the defensive error below should be unreachable.
    int b2 = -1;
    for (int i = 1; i < pos[b3]; i++) {
        int h = rot[i];
        if (rank[h] > rank[b3] && (b2 == -1 || rank[h] < rank[b2])) b2 = h;
    }
    if (b2 == -1) throw MapError(Errc::FrameMissing);
    assert(rank[b1] < rank[b3] && rank[b3] < rank[b2]);

    // K: strictly between b2 and b3 in rotation, strictly between b1 and b3 in
    // rank. Type I means this block is empty.
    bool k_empty = true;
    for (int i = pos[b2] + 1; i < pos[b3] && k_empty; i++) {
        int h = rot[i];
        if (rank[b1] < rank[h] && rank[h] < rank[b3]) k_empty = false;
    }

    return TrisectionInfo{tau, b1, b2, b3,
                          k_empty ? TrisectionKind::TypeI : TrisectionKind::TypeII};
}

TrisectionInfo trisection_frame(const UnicellularMap& m, int tau) {
    return trisection_frame(m, tour_rank(m), tau);
}

Diagram diagram(const UnicellularMap& m, int start) {
    TourRank rank = tour_rank(m);
    Diagram d;
    for (int h : vertex_of(m, start)) {
        d.columns.push_back(h);
        d.rows.push_back(rank[h]);
    }
    return d;
}

} // namespace unicell
