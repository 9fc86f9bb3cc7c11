#ifndef UNICELL_ERROR_HPP
#define UNICELL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace unicell {

/* Every rejectable condition in the library gets its own code so callers
   (and tests) can discriminate without parsing messages. */
enum class Errc {
    NotInvolution,    // alpha has a fixed point or is not self-inverse
    NotBijection,     // an image array is not a permutation of 0..2n-1
    MultiFace,        // alpha∘sigma has more than one cycle
    ParseError,       // malformed map line
    RootLabelNonzero, // labelled map whose root vertex is not labelled 0
    LabelJump,        // adjacent vertex labels differ by 2 or more
    NotATrisection,   // half-edge is not a trisection of the map
    FrameMissing,     // no b2 candidate (kept defensively; see trisection_frame)
    SameVertex,       // gluing triple not in three distinct vertices
    BadOrder,         // gluing triple not strictly increasing in tour rank
    NotSameVertex,    // slicing triple not in a single vertex
    NotIntertwined,   // slicing triple not intertwined as ordered
    WrongType,        // type-I inverse applied to type II or vice versa
    OrderViolated,    // vertex/trisection minima not strictly increasing
    EvenMarks,        // even number of marked vertices
    LabelMismatch,    // marked vertices do not share one label
    SizeBound,        // brute-force size limit exceeded
    GenusTooLarge,    // n+1-2g < 1: no such maps
};

const char* errc_message(Errc code);

class MapError : public std::runtime_error {
public:
    MapError(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    explicit MapError(Errc code) : MapError(code, errc_message(code)) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace unicell

#endif
