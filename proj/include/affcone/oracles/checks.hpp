#pragma once

// Exhaustive comparisons between the library and its independent oracles on
// truncated balls. Shared by the self-check command and the acceptance run.

#include "affcone/cone.hpp"
#include "affcone/repmult.hpp"
#include "affcone/schubert.hpp"

#include <memory>
#include <string>

namespace affcone::oracle {

struct CheckResult {
    std::string name;
    long comparisons = 0;
    long failures = 0;
    std::string first_failure;

    bool passed() const { return comparisons > 0 && failures == 0; }
    void expect(bool ok, const std::string& what);
};

/// Length formula and t_h wdot composition against the word-length ball.
CheckResult check_length_formula(std::shared_ptr<const AffineRootData> data, int radius);
/// K|h| - N <= l <= N + sqrt(2) N |h| on the ball, in squared form.
CheckResult check_length_sandwich(std::shared_ptr<const AffineRootData> data, int radius);
/// Chevalley rule against the triangular solve, positivity, commutativity
/// and truncated associativity in H*(G/B).
CheckResult check_structure_constants(std::shared_ptr<const WeylGroup> group, int max_len);
/// Nonnegative delta shift when n != 0, its two evaluations, and additivity
/// of the Levi weight profile for deformed coefficients, over maximal parabolics.
CheckResult check_delta_shift(std::shared_ptr<const WeylGroup> group, int max_len);
/// n = nbar * ntilde for B inside every maximal parabolic.
CheckResult check_multiplicativity(std::shared_ptr<const WeylGroup> group, int max_len);
/// Freudenthal table against the Weyl-Kac series, levels 0..max_level.
CheckResult check_weight_multiplicities(std::shared_ptr<const AffineRootData> data, long max_level, long depth);
/// Klimyk sum against character peeling, levels 1..max_level.
CheckResult check_tensor_multiplicities(std::shared_ptr<const AffineRootData> data, long max_level, long depth);
/// phi_index by pairing against the closed formula on random dominant points.
CheckResult check_phi_formula(std::shared_ptr<const WeylGroup> group, int max_len, unsigned seed);

}  // namespace affcone::oracle
