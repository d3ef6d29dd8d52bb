#pragma once

#include "affcone/repmult.hpp"
#include "affcone/schubert.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace affcone {

/// (u1, u2, v, i) with u1, u2, v in W^{P_i} and epsilon_v occurring with
/// coefficient 1 in the deformed product epsilon_{u1} . epsilon_{u2}.
struct InequalityIndex {
    int node = 0;
    std::size_t u1 = 0, u2 = 0, v = 0;  // positions in the Schubert table
    WeylElement e1, e2, ev;
    std::vector<int> w1, w2, wv;        // reduced words
    IntVec h1, h2, h;                   // translation parts, w = t_h wdot
    AffineCoweight t1, t2, tv;          // u1 w_i, u2 w_i, v w_i for the fundamental coweight w_i
    long length() const { return static_cast<long>(wv.size()); }
};

/// All indices with l(v) <= max_len (which must not exceed the table), for
/// every node, ordered by (node, l(v), words).
std::vector<InequalityIndex> enumerate_inequalities(const SchubertTable& table, int max_len);

/// (lambda1, lambda2, mubar): positive levels, dominant, lambda_k(d) = 0,
/// mubar(c) = lambda1(c) + lambda2(c). mubar may carry a delta part; phi
/// ignores it.
struct ConePoint {
    AffineWeight lambda1, lambda2, mubar;
};

/// Throws std::invalid_argument unless x lies in the domain of phi.
void require_in_domain(const AffineRootData& data, const ConePoint& x);

/// Value of the inequality on x solved for b = mu(d): the inequality holds at
/// (lambda1, lambda2, mubar + b delta) iff b <= phi_index. Direct pairing.
Rational phi_index(const AffineRootData& data, const InequalityIndex& idx, const ConePoint& x);
/// The same value through the explicit quadratic expression in the
/// translation parts (i = 0) and its node-i analogue.
Rational phi_index_by_formula(const WeylGroup& group, const InequalityIndex& idx, const ConePoint& x);

/// K^2 and N in K |h| - N <= l(t_h wdot) <= N + sqrt(2) N |h|.
struct LengthNormConstants {
    Rational k_squared;
    long n = 0;
};
LengthNormConstants lvsnorm_constants(const AffineRootData& data);

/// phi_a(x) >= quad r^2 - lin r - cst for every index a whose v has translation
/// part of norm r. All three coefficients are rational upper/lower brackets.
struct PhiLowerBound {
    Rational quad, lin, cst;
};
PhiLowerBound phi_lower_bound(const AffineRootData& data, const ConePoint& x);

/// Every index a with phi_a(x) < m has l(v) <= the returned length.
long certified_length_cap(const AffineRootData& data, const ConePoint& x, const Rational& m);

class TableTooSmall : public std::runtime_error {
public:
    TableTooSmall(long needed, long available);
    long needed() const { return needed_; }
    long available() const { return available_; }

private:
    long needed_, available_;
};

struct PhiResult {
    Rational value;
    std::vector<std::size_t> attaining;  // positions in the inequality list
    long cap = 0;                        // every index below the value has l(v) <= cap
};

struct MembershipReport {
    enum class Verdict { Member, Boundary, NotMember };
    Verdict verdict = Verdict::NotMember;
    std::string reason;
    Rational b;                          // mu(d) - lambda1(d) - lambda2(d)
    std::optional<Rational> phi;
    std::vector<std::size_t> indices;    // tight (boundary) or violated (not member)
    long cap = 0;
};

std::string to_string(MembershipReport::Verdict v);

enum class SaturationMode { Stretch, DeltaShift };

struct SaturationReport {
    SaturationMode mode = SaturationMode::Stretch;
    long d = 0;
    long factor = 0;
    AffineWeight lambda1, lambda2, mu;  // the stretched triple
    TensorMultiplicity multiplicity;
    std::optional<bool> confirmed;      // empty when undecided at the depth
};

/// Inequality list and evaluation of phi with a certified truncation.
class ConeSolver {
public:
    ConeSolver(std::shared_ptr<const WeylGroup> group, int max_len);

    const WeylGroup& group() const { return *group_; }
    const SchubertTable& table() const { return *table_; }
    int max_len() const { return max_len_; }
    const std::vector<InequalityIndex>& inequalities() const { return list_; }

    /// Throws TableTooSmall when the certificate needs longer elements.
    PhiResult phi(const ConePoint& x) const;

    /// Closure membership. Throws std::invalid_argument for nonpositive levels.
    MembershipReport is_member(const AffineWeight& lambda1, const AffineWeight& lambda2,
                               const AffineWeight& mu) const;
    std::vector<MembershipReport> is_member_batch(const std::vector<std::array<AffineWeight, 3>>& triples,
                                                  int jobs) const;

    /// Stretch: c at F(lambda1, lambda2, mu) with F = d k_gdot if k_s = 1 and
    /// k_gdot k_s otherwise. DeltaShift: c at (F lambda1, F lambda2, F mu - d delta)
    /// with F = k_gdot k_s. Requires an integral member triple with
    /// mu - lambda1 - lambda2 in Q and d >= 2.
    SaturationReport saturation_check(const TensorMultiplier& engine, const AffineWeight& lambda1,
                                      const AffineWeight& lambda2, const AffineWeight& mu, long d,
                                      SaturationMode mode) const;

private:
    std::shared_ptr<const WeylGroup> group_;
    int max_len_;
    std::shared_ptr<const SchubertTable> table_;
    std::vector<InequalityIndex> list_;
};

}  // namespace affcone
