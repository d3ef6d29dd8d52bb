#pragma once

// Word-length ball of the affine Weyl group, computed by breadth-first
// search on the integer matrices of the coweight representation. Shares no
// code with the length formula or the t_h * wdot arithmetic.

#include "affcone/root_data.hpp"

#include <vector>

namespace affcone::oracle {

struct BallElement {
    IntMat matrix;  // action on (coroot coords, c, d)
    int length = 0;
    std::vector<int> word;
};

IntMat simple_reflection_matrix(const AffineRootData& data, int i);
std::vector<BallElement> weyl_ball(const AffineRootData& data, int radius);

}  // namespace affcone::oracle
