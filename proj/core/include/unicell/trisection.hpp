#ifndef UNICELL_TRISECTION_HPP
#define UNICELL_TRISECTION_HPP

#include "unicell/map.hpp"

#include <vector>

namespace unicell {

/* A half-edge h is an up-step when the rotation moves the tour forward
   (rank(sigma(h)) > rank(h)) and a down-step otherwise. A trisection is a
   down-step whose rotation successor is not its vertex's minimal half-edge;
   a genus-g map has exactly 2g of them. */
enum class StepKind { UpStep, DownStep, Trisection };

enum class TrisectionKind { TypeI, TypeII };

/* The frame of a trisection tau in vertex v = V(tau):
     b1 = rank-minimal half-edge of v,
     b3 = sigma(tau),
     b2 = rank-minimal h lying strictly between b1 and b3 in the rotation of v
          started at b1 with rank(h) > rank(b3)   (tau itself always qualifies,
          so b2 exists; FrameMissing is raised only defensively).
   Invariants: rank(b1) < rank(b3) < rank(b2); rotation order (b1, b2, b3).
   kind is TypeI iff the block K = { h in v : h strictly between b2 and b3 in
   rotation order from b1, rank(b1) < rank(h) < rank(b3) } is empty. */
struct TrisectionInfo {
    int tau;
    int b1;
    int b2;
    int b3;
    TrisectionKind kind;
    bool operator==(const TrisectionInfo& o) const = default;
};

/* Rank-vs-rotation scatter of one vertex: columns[i] is the i-th half-edge of
   the rotation cycle from start, rows[i] its tour rank. Inspection only —
   type classification never materializes this. */
struct Diagram {
    std::vector<int> columns;
    std::vector<int> rows;
    std::vector<std::pair<int, int>> points() const {
        std::vector<std::pair<int, int>> p;
        for (size_t i = 0; i < columns.size(); i++) p.emplace_back((int)i, rows[i]);
        return p;
    }
};

StepKind step_kind(const UnicellularMap& m, int h);
StepKind step_kind(const UnicellularMap& m, const TourRank& rank, int h);

/* All trisections, sorted by tour rank; length is always 2·genus(m). */
std::vector<int> trisections(const UnicellularMap& m);

TrisectionInfo trisection_frame(const UnicellularMap& m, int tau);
TrisectionInfo trisection_frame(const UnicellularMap& m, const TourRank& rank, int tau);

Diagram diagram(const UnicellularMap& m, int start);

} // namespace unicell

#endif
