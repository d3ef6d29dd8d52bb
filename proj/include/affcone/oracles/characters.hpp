#pragma once

// Reference characters computed from the Weyl-Kac formula. Kept apart from the
// Freudenthal/Klimyk engine so the two can be compared.

#include "affcone/root_data.hpp"

#include <map>
#include <vector>

namespace affcone::oracle {

/// Formal series sum_beta c_beta e^{-beta}, dense on 0 <= beta_i <= bound_i.
class BoxSeries {
public:
    explicit BoxSeries(IntVec bound);

    const IntVec& bound() const { return bound_; }
    std::size_t size() const { return coef_.size(); }
    bool contains(const IntVec& beta) const;
    Integer at(const IntVec& beta) const;  // 0 outside the box
    Integer& operator[](std::size_t k) { return coef_[k]; }
    const Integer& operator[](std::size_t k) const { return coef_[k]; }
    std::size_t index(const IntVec& beta) const;
    IntVec point(std::size_t k) const;

private:
    IntVec bound_;
    std::vector<Integer> coef_;
};

struct SeriesRoot {
    IntVec coords;
    long mult = 1;
};

/// e^{-lambda} ch L(lambda) on the box: numerator sum_w eps(w) e^{w(lambda+rho)-(lambda+rho)}
/// divided by prod (1 - e^{-alpha})^{mult alpha}.
BoxSeries weyl_kac_character(const IntMat& cartan, const std::vector<SeriesRoot>& roots, const IntVec& labels,
                             const IntVec& bound);

std::vector<SeriesRoot> affine_roots(const AffineRootData& data, const IntVec& bound);
std::vector<SeriesRoot> finite_roots(const FiniteRootData& fd);

/// Box containing lambda - nu for every weight nu of L(lambda) with delta-degree <= depth.
IntVec affine_box(const AffineRootData& data, const AffineWeight& lambda, long depth);

/// Character of L(lambda) down to the given depth.
BoxSeries affine_character(const AffineRootData& data, const AffineWeight& lambda, long depth);

/// Decomposition of the truncated product ch L(lambda1) ch L(lambda2) by
/// repeatedly removing the character of the highest remaining weight. Keys
/// are root coordinates of lambda1 + lambda2 - mu.
std::map<IntVec, Integer> affine_tensor_by_peeling(const AffineRootData& data, const AffineWeight& lambda1,
                                                   const AffineWeight& lambda2, long depth);

/// Finite type. Keys are Dynkin labels of mu.
std::map<IntVec, Integer> finite_tensor_by_peeling(const FiniteRootData& fd, const IntVec& lambda1,
                                                   const IntVec& lambda2);
/// Dominant weight multiplicities of the finite module, keyed by labels.
std::map<IntVec, Integer> finite_dominant_character(const FiniteRootData& fd, const IntVec& labels);

}  // namespace affcone::oracle
