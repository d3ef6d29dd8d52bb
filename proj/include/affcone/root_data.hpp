#pragma once

#include "affcone/arith.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace affcone {

/// Finite simple Cartan type, e.g. A1, C2, G2. The affine algebra built
/// from it is written with a trailing '~' (A1~).
struct CartanType {
    char family = 'A';
    int rank = 1;

    /// Accepts "A1", "A1~", "A_1", "a_1~" ... Throws std::invalid_argument
    /// on unknown families or ranks outside the classification.
    static CartanType parse(std::string_view text);

    std::string label() const;         // "A1"
    std::string affine_label() const;  // "A1~"
    bool operator==(const CartanType&) const = default;
};

/// Root system of a finite-type Cartan matrix. Built either from a Cartan
/// type or from an arbitrary finite-type matrix (Levi subsystems, which may
/// be reducible).
///
/// Conventions:
///   cartan[i][j] = <alpha_i^vee, alpha_j>
///   weights are stored in Dynkin labels (coordinates on fundamental weights),
///   coweights in simple-coroot coordinates, roots in simple-root coordinates.
///   The invariant form is normalized so that long roots of every
///   irreducible component have squared norm 2.
class FiniteRootData {
public:
    static FiniteRootData from_type(const CartanType& type);
    static FiniteRootData from_cartan(const IntMat& cartan, std::string label);

    const std::string& label() const { return label_; }
    int rank() const { return static_cast<int>(cartan_.size()); }
    bool irreducible() const { return irreducible_; }

    const IntMat& cartan() const { return cartan_; }
    const RatVec& simple_root_norms() const { return norms_; }
    const RatMat& root_gram() const { return root_gram_; }
    const RatMat& weight_gram() const { return weight_gram_; }
    const IntMat& coweight_gram() const { return coweight_gram_; }

    const std::vector<IntVec>& positive_roots() const { return positive_roots_; }
    const std::vector<IntVec>& positive_root_labels() const { return positive_labels_; }
    const std::vector<IntVec>& positive_coroots() const { return positive_coroots_; }
    std::size_t num_positive_roots() const { return positive_roots_.size(); }

    /// Highest root / coroot (irreducible systems only).
    const IntVec& highest_root() const;
    const IntVec& highest_coroot() const;

    IntVec rho_labels() const { return IntVec(rank(), 1); }
    /// Sum of the positive coroots: a regular dominant element of the coroot
    /// lattice, used to test the sign of w^{-1} alpha.
    const IntVec& two_rho_check() const { return two_rho_check_; }

    IntVec simple_root_labels(int i) const;
    IntVec root_to_labels(const IntVec& root) const;
    RatVec labels_to_root_coords(const RatVec& labels) const;
    /// Root coordinates of an integral weight lying in the root lattice,
    /// or nullopt when it does not.
    std::optional<IntVec> root_lattice_coords(const IntVec& labels) const;

    RatVec fundamental_coweight(int i) const;  // coroot coordinates
    IntVec nu(const IntVec& coweight) const;   // coroot coords -> labels
    RatVec nu(const RatVec& coweight) const;

    Rational weight_form(const RatVec& a, const RatVec& b) const;
    Rational coweight_form(const RatVec& a, const RatVec& b) const;
    Rational coweight_form(const IntVec& a, const IntVec& b) const;
    Rational root_norm(const IntVec& root) const;  // (beta, beta)
    IntVec coroot_of(const IntVec& root) const;    // beta^vee in coroot coordinates

    // Matrices of the reflection s_beta on labels and on coroot coordinates.
    IntMat reflection_on_labels(const IntVec& root) const;
    IntMat reflection_on_coroots(const IntVec& root) const;

private:
    void finish();

    std::string label_;
    bool irreducible_ = true;
    IntMat cartan_;
    RatVec norms_;
    RatMat root_gram_;
    RatMat cartan_inverse_;
    RatMat weight_gram_;
    IntMat coweight_gram_;
    std::vector<IntVec> positive_roots_;
    std::vector<IntVec> positive_labels_;
    std::vector<IntVec> positive_coroots_;
    IntVec highest_root_;
    IntVec highest_coroot_;
    IntVec two_rho_check_;
};

/// lambda = dot + level * Lambda + delta * delta, dot in finite Dynkin labels.
struct AffineWeight {
    RatVec dot;
    Rational level = 0;
    Rational delta = 0;

    AffineWeight operator+(const AffineWeight& o) const;
    AffineWeight operator-(const AffineWeight& o) const;
    AffineWeight operator*(const Rational& s) const;
    bool operator==(const AffineWeight& o) const;
    bool is_integral() const;
};

/// tau = dot + c_coeff * c + d_coeff * d, dot in simple-coroot coordinates.
struct AffineCoweight {
    RatVec dot;
    Rational c = 0;
    Rational d = 0;

    AffineCoweight operator+(const AffineCoweight& o) const;
    AffineCoweight operator-(const AffineCoweight& o) const;
    AffineCoweight operator*(const Rational& s) const;
    bool operator==(const AffineCoweight& o) const;
};

/// Untwisted affine extension of a finite simple root system.
/// Node 0 is the affine node: alpha_0 = delta - theta, alpha_0^vee = c - theta^vee.
class AffineRootData {
public:
    /// build_affine. Throws std::invalid_argument for an invalid type.
    static std::shared_ptr<const AffineRootData> build(const CartanType& type);

    const CartanType& type() const { return type_; }
    const FiniteRootData& finite() const { return finite_; }
    int rank() const { return finite_.rank(); }
    int num_nodes() const { return finite_.rank() + 1; }

    const IntMat& cartan() const { return cartan_; }  // affine, (l+1)x(l+1)
    long dual_coxeter() const { return dual_coxeter_; }
    const IntVec& marks() const { return marks_; }      // delta = sum marks_i alpha_i
    const IntVec& comarks() const { return comarks_; }  // c = sum comarks_i alpha_i^vee
    const IntVec& theta() const { return finite_.highest_root(); }
    const IntVec& theta_check() const { return finite_.highest_coroot(); }

    AffineWeight zero_weight() const;
    AffineWeight Lambda() const;
    AffineWeight delta() const;
    AffineWeight fundamental_weight(int i) const;
    AffineWeight rho() const;
    AffineWeight simple_root(int i) const;

    AffineCoweight zero_coweight() const;
    AffineCoweight c() const;
    AffineCoweight d() const;
    AffineCoweight simple_coroot(int i) const;
    AffineCoweight fundamental_coweight(int i) const;

    Rational pair(const AffineWeight& w, const AffineCoweight& t) const;
    /// Normalized invariant form: (Lambda, delta) = 1, (Lambda, Lambda) = (delta, delta) = 0.
    Rational form(const AffineWeight& a, const AffineWeight& b) const;
    /// Invariant form on coweights: (c, d) = 1, (c, c) = (d, d) = 0.
    Rational form(const AffineCoweight& a, const AffineCoweight& b) const;

    /// <lambda, alpha_i^vee> for i = 0..l.
    RatVec affine_labels(const AffineWeight& w) const;
    AffineWeight from_affine_labels(const RatVec& labels, const Rational& delta) const;
    bool is_dominant(const AffineWeight& w) const;

    /// Coordinates on alpha_0..alpha_l of a level-zero weight.
    std::optional<RatVec> root_coords(const AffineWeight& w) const;

private:
    CartanType type_;
    FiniteRootData finite_;
    IntMat cartan_;
    long dual_coxeter_ = 0;
    IntVec marks_;
    IntVec comarks_;
};

/// lcm of the coordinates of theta on the simple roots.
long k_g_dot(const AffineRootData& data);
/// lcm of saturation factors of the maximal Levi subalgebras (table lookup).
long k_s(const AffineRootData& data);
/// All tabulated values (two for G2, one otherwise).
std::vector<long> k_s_alternatives(const AffineRootData& data);

/// lambda in Q = Qdot + Z delta. Requires integral level and delta coefficient.
bool in_root_lattice(const AffineRootData& data, const AffineWeight& w);

std::string to_string(const AffineWeight& w);

}  // namespace affcone
