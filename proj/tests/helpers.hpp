#pragma once

#include "affcone/weyl.hpp"

namespace testutil {

// Matrix of w on coweight coordinates (coroot coords, c, d), same layout as
// the ball oracle.
inline affcone::IntMat coweight_matrix(const affcone::WeylGroup& g, const affcone::WeylElement& w)
{
    using namespace affcone;
    const int l = g.data().rank();
    IntMat m(l + 2, IntVec(l + 2, 0));
    for (int j = 0; j < l + 2; ++j) {
        AffineCoweight t = g.data().zero_coweight();
        if (j < l) t.dot[j] = 1;
        else if (j == l) t.c = 1;
        else t.d = 1;
        const AffineCoweight r = g.act(w, t);
        for (int i = 0; i < l; ++i) m[i][j] = to_long_exact(r.dot[i]);
        m[l][j] = to_long_exact(r.c);
        m[l + 1][j] = to_long_exact(r.d);
    }
    return m;
}

inline std::shared_ptr<const affcone::AffineRootData> affine(const char* name)
{
    return affcone::AffineRootData::build(affcone::CartanType::parse(name));
}

}  // namespace testutil
