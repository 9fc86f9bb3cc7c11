#pragma once

#include "unicell/error.hpp"

#include <functional>
#include <optional>
#include <string>

/* Golden fixtures shared across the test binaries. The 2-edge trio: a path
   tree, a star tree, and the one-vertex genus-1 map both glue to. */
inline const std::string kPathTree = "U 2 r0 a:1,0,3,2 s:0,3,2,1";
inline const std::string kStarTree = "U 2 r0 a:1,0,3,2 s:2,1,0,3";
inline const std::string kTorus = "U 2 r0 a:1,0,3,2 s:3,2,0,1";

/* Frozen four-edge fixtures: the lexicographically least genus-1 map that
   admits a two-vertices-plus-trisection gluing (v1=0, v2=1, tau=5), the
   genus-2 result of that gluing, and the tree its full unwinding reaches. */
inline const std::string kPsiBase = "U 4 r0 a:1,0,4,6,2,7,3,5 s:0,4,6,2,7,3,5,1";
inline const std::string kPsiGlued = "U 4 r0 a:1,0,4,6,2,7,3,5 s:4,2,6,0,7,3,5,1";
inline const std::string kXiTree = "U 4 r0 a:1,0,4,6,2,7,3,5 s:0,4,2,3,7,6,5,1";

inline std::optional<unicell::Errc> errc_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const unicell::MapError& e) {
        return e.code();
    }
    return std::nullopt;
}
