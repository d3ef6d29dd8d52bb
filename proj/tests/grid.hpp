#pragma once

#include "affcone/root_data.hpp"

#include <array>
#include <functional>
#include <vector>

namespace testutil {

/// Integral dominant affine labels of the given level.
inline std::vector<affcone::IntVec> dominant_labels_of_level(const affcone::AffineRootData& d, long level)
{
    using namespace affcone;
    std::vector<IntVec> out;
    IntVec cur(d.num_nodes(), 0);
    std::function<void(int, long)> rec = [&](int j, long left) {
        if (j == d.num_nodes()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (long a = 0; a * d.comarks()[j] <= left; ++a) {
            cur[j] = a;
            rec(j + 1, left - a * d.comarks()[j]);
        }
        cur[j] = 0;
    };
    rec(0, level);
    return out;
}

inline affcone::AffineWeight labels_weight(const affcone::AffineRootData& d, const affcone::IntVec& labels,
                                           long delta = 0)
{
    return d.from_affine_labels(affcone::to_rational(labels), affcone::Rational(delta));
}

/// Sum of the finite Dynkin labels.
inline long dot_height(const affcone::AffineWeight& w)
{
    affcone::Rational s = 0;
    for (const auto& x : w.dot) s += x;
    return affcone::to_long_exact(s);
}

/// Points (lambda1, lambda2, mubar) of the domain: levels 1..max_level, all
/// dot parts of height <= max_height, lambda1 listed before lambda2 in label
/// order (the problem is symmetric in the two factors).
inline std::vector<std::array<affcone::AffineWeight, 3>> cone_grid(const affcone::AffineRootData& d, long max_level,
                                                                   long max_height)
{
    using namespace affcone;
    std::vector<std::pair<IntVec, AffineWeight>> lambdas;
    for (long l = 1; l <= max_level; ++l)
        for (const IntVec& lab : dominant_labels_of_level(d, l)) {
            const AffineWeight w = labels_weight(d, lab);
            if (dot_height(w) <= max_height) lambdas.emplace_back(lab, w);
        }
    std::vector<std::array<AffineWeight, 3>> out;
    for (std::size_t a = 0; a < lambdas.size(); ++a)
        for (std::size_t b = a; b < lambdas.size(); ++b) {
            const AffineWeight& l1 = lambdas[a].second;
            const AffineWeight& l2 = lambdas[b].second;
            const long level = to_long_exact(l1.level + l2.level);
            for (const IntVec& lab : dominant_labels_of_level(d, level)) {
                const AffineWeight mu = labels_weight(d, lab);
                if (dot_height(mu) <= max_height) out.push_back({l1, l2, mu});
            }
        }
    return out;
}

}  // namespace testutil
