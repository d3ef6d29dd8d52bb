#pragma once

#include "affcone/root_data.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace affcone {

/// w = t_h * wdot. The finite part is kept as three integer matrices: its
/// action on Dynkin labels, on coroot coordinates and on root coordinates.
struct WeylElement {
    IntVec h;
    IntMat wl;
    IntMat wc;
    IntMat wr;

    bool operator==(const WeylElement& o) const { return h == o.h && wc == o.wc; }
    bool operator<(const WeylElement& o) const { return h != o.h ? h < o.h : wc < o.wc; }
};

/// Real affine root: fin (finite root in simple-root coordinates) + n * delta.
struct RealRoot {
    IntVec fin;
    long n = 0;

    bool positive() const;
    RealRoot operator-() const;
    bool operator==(const RealRoot& o) const { return n == o.n && fin == o.fin; }
    bool operator<(const RealRoot& o) const { return n != o.n ? n < o.n : fin < o.fin; }
};

/// Standard parabolic subgroup: the set of simple indices it contains.
struct Parabolic {
    std::vector<bool> member;

    static Parabolic borel(int nodes) { return {std::vector<bool>(nodes, false)}; }
    static Parabolic maximal(int nodes, int i);
    bool contains(int j) const { return member[j]; }
    bool subset_of(const Parabolic& q) const;
};

class WeylGroup {
public:
    explicit WeylGroup(std::shared_ptr<const AffineRootData> data);

    const AffineRootData& data() const { return *data_; }
    std::shared_ptr<const AffineRootData> data_ptr() const { return data_; }
    int num_nodes() const { return data_->num_nodes(); }

    WeylElement identity() const;
    const WeylElement& simple(int i) const { return simple_[i]; }
    WeylElement translation(const IntVec& h) const;
    WeylElement reflection(const RealRoot& beta) const;
    WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
    WeylElement inverse(const WeylElement& a) const;
    WeylElement from_word(const std::vector<int>& word) const;

    AffineCoweight act(const WeylElement& w, const AffineCoweight& t) const;
    AffineWeight act(const WeylElement& w, const AffineWeight& l) const;
    RealRoot act(const WeylElement& w, const RealRoot& beta) const;

    long length(const WeylElement& w) const;
    std::vector<int> reduced_word(const WeylElement& w) const;
    bool is_left_descent(const WeylElement& w, int i) const;   // l(s_i w) < l(w)
    bool is_right_descent(const WeylElement& w, int i) const;  // l(w s_i) < l(w)
    bool bruhat_leq(const WeylElement& u, const WeylElement& v) const;

    bool is_min_rep(const WeylElement& w, const Parabolic& p) const;
    /// Elements of W^P of length <= max_len, sorted by (length, reduced word).
    /// W^P is stable under deleting the first letter, so the search extends on the left.
    std::vector<WeylElement> enumerate_min_reps(const Parabolic& p, int max_len) const;
    /// w = wbar * wtilde with wbar in W^Q and wtilde in W_Q^P. Needs w in W^P.
    std::pair<WeylElement, WeylElement> coset_factorize(const WeylElement& w, const Parabolic& p,
                                                        const Parabolic& q) const;

    /// Phi_w = w^{-1} Phi^+ cap Phi^-, one root per letter of a reduced word.
    std::vector<RealRoot> inversion_set(const WeylElement& w) const;

    RealRoot simple_root(int i) const;
    /// Coordinates on alpha_0..alpha_l.
    IntVec affine_coords(const RealRoot& beta) const;
    AffineWeight as_weight(const RealRoot& beta) const;
    AffineCoweight coroot(const RealRoot& beta) const;

    /// Reduced word as comma separated indices ("" for e).
    std::string encode(const WeylElement& w) const;
    WeylElement decode(const std::string& text) const;

private:
    std::shared_ptr<const AffineRootData> data_;
    std::vector<WeylElement> simple_;
    IntMat root_to_labels_;
    RatMat labels_to_roots_;
};

/// Lexicographic order on (length, reduced word) used for every enumeration.
struct WordOrder {
    const WeylGroup* group;
    bool operator()(const WeylElement& a, const WeylElement& b) const;
};

}  // namespace affcone
