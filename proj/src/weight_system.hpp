#pragma once

// Freudenthal and Klimyk over a (possibly affine) Cartan matrix. Weights are
// written lambda - beta with beta in root coordinates; only the labels of
// lambda and the Gram matrix of the simple roots are needed.

#include "affcone/arith.hpp"
#include "affcone/root_data.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace affcone::detail {

struct PositiveRoot {
    IntVec coords;
    long mult = 1;
};

struct WeightSystem {
    IntMat cartan;
    RatVec half_norms;  // (alpha_i, alpha_i) / 2
    RatMat gram;        // (alpha_i, alpha_j)
    std::vector<PositiveRoot> roots;
    bool affine = false;  // beta[0] is then the delta-degree
};

/// Positive roots of the affine system with alpha_0-coordinate <= depth.
WeightSystem affine_system(const AffineRootData& data, long depth);
WeightSystem finite_system(const FiniteRootData& fd);

Rational beta_form(const WeightSystem& sys, const IntVec& a, const IntVec& b);
/// (lambda, beta) for lambda given by its labels.
Rational label_pairing(const WeightSystem& sys, const IntVec& labels, const IntVec& beta);
/// Labels of lambda - beta.
IntVec shifted_labels(const WeightSystem& sys, const IntVec& labels, const IntVec& beta);

/// Moves lambda - beta into the dominant chamber by simple reflections.
/// Returns nullopt as soon as beta leaves Q+, i.e. the weight is not below lambda.
std::optional<IntVec> dominant_beta(const WeightSystem& sys, const IntVec& labels, IntVec beta);

/// 2(lambda, beta) - (beta, beta) = |lambda|^2 - |lambda - beta|^2; negative
/// values cannot occur for weights of L(lambda).
Rational norm_gap(const WeightSystem& sys, const IntVec& labels, const IntVec& beta);

/// Multiplicities of the dominant weights lambda - beta of L(lambda).
class FreudenthalTable {
public:
    /// candidates must contain every dominant beta of the truncation
    /// (beta[0] <= depth in the affine case), including 0.
    FreudenthalTable(std::shared_ptr<const WeightSystem> sys, IntVec labels, std::vector<IntVec> candidates, long depth);

    long depth() const { return depth_; }
    const IntVec& labels() const { return labels_; }
    /// Any beta. 0 for weights not below lambda, nullopt beyond the depth.
    std::optional<Integer> multiplicity(const IntVec& beta) const;
    const std::map<IntVec, Integer>& dominant() const { return mult_; }

private:
    std::shared_ptr<const WeightSystem> sys_;
    IntVec labels_;
    long depth_;
    std::map<IntVec, Integer> mult_;
};

/// Dominant beta with beta[0] <= depth for an affine highest weight given by
/// its affine labels.
std::vector<IntVec> affine_dominant_candidates(const AffineRootData& data, const IntVec& labels, long depth);
std::vector<IntVec> finite_dominant_candidates(const FiniteRootData& fd, const IntVec& labels);

struct OrbitPoint {
    IntVec eta;  // start - w(start)
    int sign;
};

/// The W-orbit of a regular dominant weight, walked downwards by simple
/// reflections. Points for which stop(eta) holds are neither kept nor expanded.
std::vector<OrbitPoint> descending_orbit(const IntMat& cartan, const IntVec& labels,
                                         const std::function<bool(const IntVec&)>& stop);

}  // namespace affcone::detail
