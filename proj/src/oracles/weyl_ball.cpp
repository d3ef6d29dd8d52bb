#include "affcone/oracles/weyl_ball.hpp"

#include <set>

namespace affcone::oracle {

namespace {

// Coordinates of a coweight: x (coroot coords), then c, then d.
IntVec coroot_vector(const AffineRootData& data, int i)
{
    const int l = data.rank();
    IntVec v(l + 2, 0);
    if (i == 0) {
        for (int k = 0; k < l; ++k) v[k] = -data.theta_check()[k];
        v[l] = 1;
    } else {
        v[i - 1] = 1;
    }
    return v;
}

// <alpha_i, tau> as a row vector on the same coordinates.
IntVec root_row(const AffineRootData& data, int i)
{
    const int l = data.rank();
    const IntMat& a = data.finite().cartan();
    IntVec row(l + 2, 0);
    if (i == 0) {
        for (int k = 0; k < l; ++k) {
            long s = 0;
            for (int j = 0; j < l; ++j) s += a[k][j] * data.theta()[j];
            row[k] = -s;
        }
        row[l + 1] = 1;
    } else {
        for (int k = 0; k < l; ++k) row[k] = a[k][i - 1];
    }
    return row;
}

}  // namespace

IntMat simple_reflection_matrix(const AffineRootData& data, int i)
{
    const IntVec co = coroot_vector(data, i);
    const IntVec row = root_row(data, i);
    IntMat m = identity_matrix(co.size());
    for (std::size_t r = 0; r < co.size(); ++r)
        for (std::size_t c = 0; c < co.size(); ++c) m[r][c] -= co[r] * row[c];
    return m;
}

std::vector<BallElement> weyl_ball(const AffineRootData& data, int radius)
{
    const int n = data.num_nodes();
    std::vector<IntMat> gens;
    for (int i = 0; i < n; ++i) gens.push_back(simple_reflection_matrix(data, i));

    std::vector<BallElement> out;
    std::set<IntMat> seen;
    BallElement e{identity_matrix(data.rank() + 2), 0, {}};
    seen.insert(e.matrix);
    out.push_back(e);
    std::size_t begin = 0;
    for (int len = 1; len <= radius; ++len) {
        const std::size_t end = out.size();
        for (std::size_t k = begin; k < end; ++k)
            for (int i = 0; i < n; ++i) {
                IntMat m = mat_mul(out[k].matrix, gens[i]);
                if (!seen.insert(m).second) continue;
                BallElement b{std::move(m), len, out[k].word};
                b.word.push_back(i);
                out.push_back(std::move(b));
            }
        begin = end;
    }
    return out;
}

}  // namespace affcone::oracle
