#pragma once

// Worked example patterns shared by the test suites.

#include "gtkk/gt.hpp"

namespace fixtures {

// Shape (5,4,2,1,0), weight (3,2,4,2,1).
inline gtkk::GTPattern weight_example() {
    return gtkk::GTPattern({{3}, {3, 2}, {5, 3, 1}, {5, 4, 2, 0}, {5, 4, 2, 1, 0}});
}

// Left factor of the worked pair; reads f = [1,2,4,2,1,1]. Violates SE(3,2)
// and SE(5,3).
inline gtkk::GTPattern pair_left() {
    return gtkk::GTPattern({{1}, {2, 1}, {5, 2, 2}, {5, 3, 2, 0}, {6, 5, 3, 3, 0}});
}

// Right factor of the worked pair; reads i = [1,3,2,4,2]. Violates SE(2,1).
inline gtkk::GTPattern pair_right() {
    return gtkk::GTPattern({{2}, {5, 4}, {6, 4, 2}, {6, 4, 4, 1}, {6, 5, 4, 2, 0}});
}

}  // namespace fixtures
