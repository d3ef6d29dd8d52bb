#pragma once

#include "affcone/root_data.hpp"
#include "affcone/schubert.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace affcone {

namespace detail {
class FreudenthalTable;
struct WeightSystem;
}  // namespace detail

/// Weight multiplicities of the integrable module L(lambda), for all weights
/// whose delta-degree below lambda is at most depth.
class WeightMultTable {
public:
    /// lambda integral dominant of level >= 0.
    WeightMultTable(std::shared_ptr<const AffineRootData> data, const AffineWeight& lambda, long depth);

    const AffineRootData& data() const { return *data_; }
    const AffineWeight& highest() const { return lambda_; }
    long depth() const { return depth_; }

    /// 0 for integral weights that are not weights of L(lambda); nullopt when
    /// the dominant conjugate of mu lies deeper than the table.
    std::optional<Integer> multiplicity(const AffineWeight& mu) const;
    /// Same, for mu = lambda - sum beta_i alpha_i.
    std::optional<Integer> multiplicity_below(const IntVec& beta) const;

    /// Dominant weights with nonzero multiplicity, ordered by height below lambda.
    std::vector<std::pair<AffineWeight, Integer>> dominant() const;

private:
    std::shared_ptr<const AffineRootData> data_;
    AffineWeight lambda_;
    long depth_;
    std::shared_ptr<const detail::FreudenthalTable> table_;
};

/// Outcome of one Klimyk evaluation. value is empty when the table depth does
/// not suffice to certify the sum.
struct TensorMultiplicity {
    std::optional<Integer> value;
    long depth = 0;           // weight-table depth available
    long required_depth = 0;  // depth of the deepest multiplicity the sum needed
    long orbit_bound = 0;     // orbit points deeper than this provably contribute 0
    std::size_t orbit_points = 0;
};

/// c_{lambda1 lambda2}^mu for every dominant mu with delta-degree <= depth below
/// lambda1 + lambda2.
struct TensorMultTable {
    AffineWeight lambda1, lambda2;
    long depth = 0;
    std::vector<std::pair<AffineWeight, Integer>> entries;  // nonzero values only
    std::vector<AffineWeight> undecided;
};

/// Tensor product multiplicities with cached weight tables. Thread safe.
class TensorMultiplier {
public:
    TensorMultiplier(std::shared_ptr<const AffineRootData> data, long depth);

    const AffineRootData& data() const { return *data_; }
    std::shared_ptr<const AffineRootData> data_ptr() const { return data_; }
    long depth() const { return depth_; }

    /// Klimyk's alternating sum over the orbit of mu + rho. All three weights
    /// integral dominant; returns 0 on level mismatch or when
    /// lambda1 + lambda2 - mu is not in Q+.
    TensorMultiplicity multiplicity(const AffineWeight& lambda1, const AffineWeight& lambda2,
                                    const AffineWeight& mu) const;
    TensorMultTable decompose(const AffineWeight& lambda1, const AffineWeight& lambda2) const;

    std::shared_ptr<const WeightMultTable> weight_table(const AffineWeight& lambda, long depth) const;

private:
    TensorMultiplicity klimyk(const AffineWeight& lambda1, const AffineWeight& lambda2, const AffineWeight& mu) const;

    std::shared_ptr<const AffineRootData> data_;
    long depth_;
    mutable std::mutex mutex_;
    mutable std::map<IntVec, std::shared_ptr<const WeightMultTable>> tables_;
};

TensorMultiplicity tensor_multiplicity(std::shared_ptr<const AffineRootData> data, const AffineWeight& lambda1,
                                       const AffineWeight& lambda2, const AffineWeight& mu, long depth);

/// Largest b with L(mubar + b delta) in L(lambda1) (x) L(lambda2), searched
/// over b in [top - window, top], where top is the largest b with
/// mubar + b delta <= lambda1 + lambda2.
struct B0Report {
    std::optional<long> b0;
    long window_top = 0;
    long window_bottom = 0;
    std::vector<long> support;    // b in the window with nonzero multiplicity, descending
    std::vector<long> undecided;  // b in the window the depth could not settle
    std::string shape;            // "interval", "gap", "other" or "none"
};

B0Report b0(const TensorMultiplier& engine, const AffineWeight& lambda1, const AffineWeight& lambda2,
            const AffineWeight& mubar, long window);

/// Multiplicities of the finite-dimensional module with highest weight labels.
std::map<IntVec, Integer> finite_dominant_multiplicities(const FiniteRootData& fd, const IntVec& labels);
/// Finite-type tensor product multiplicity on Dynkin labels.
Integer finite_tensor_multiplicity(const FiniteRootData& fd, const IntVec& lambda1, const IntVec& lambda2,
                                   const IntVec& mu);

/// Cartan matrix of the Levi subalgebra spanned by every simple root but alpha_i.
IntMat levi_cartan(const AffineRootData& data, int i);

/// Tensor multiplicity for the Levi L_i: the weights are full affine weights,
/// dominant on the nodes j != i. Zero unless lambda1 + lambda2 - mu is an
/// integral combination of the alpha_j, j != i. Throws std::invalid_argument
/// when a weight is not dominant for L_i.
Integer levi_multiplicity(const AffineRootData& data, int i, const AffineWeight& lambda1,
                          const AffineWeight& lambda2, const AffineWeight& mu);

struct BoundaryReport {
    Integer ordinary_coefficient;
    AffineWeight lambda1_bar, lambda2_bar, mu_bar;
    TensorMultiplicity affine;
    Integer levi = 0;
    /// Decided and equal. Empty when the affine side is undecided.
    std::optional<bool> equal;
};

/// Compares c_{lambda1 lambda2}^mu with the Levi multiplicity of
/// (u1^{-1} lambda1, u2^{-1} lambda2, v^{-1} mu). Requires u1, u2, v in W^{P_i},
/// n_{u1 u2}^v = 1 in H*(G/P_i) and
/// <mu, v w_i> = <lambda1, u1 w_i> + <lambda2, u2 w_i> for the fundamental
/// coweight w_i; throws std::invalid_argument otherwise.
BoundaryReport boundary_reduction_check(const SchubertTable& table, const TensorMultiplier& engine,
                                        std::size_t u1, std::size_t u2, std::size_t v, int i,
                                        const AffineWeight& lambda1, const AffineWeight& lambda2,
                                        const AffineWeight& mu);

/// <lambda, w tau> for the fundamental coweight of node i.
Rational pairing_with_moved_coweight(const WeylGroup& group, const AffineWeight& lambda, const WeylElement& w, int i);

}  // namespace affcone
