#pragma once

#include "affcone/polynomial.hpp"
#include "affcone/weyl.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

namespace affcone {

/// How the localization table and the triangular solve are carried out.
///   Polynomial: exact polynomials in alpha_0..alpha_l.
///   Evaluated:  the same identities specialized at alpha_i = 1, where every
///               positive root is a nonzero integer. Top-degree constants are
///               unchanged by the specialization.
enum class SolveMode { Polynomial, Evaluated };

/// Schubert calculus on the affine flag variety truncated at max_len:
/// equivariant localizations xi^w(v) and the structure constants
/// n_{u1 u2}^v of H*(G/P) for standard parabolics P.
class SchubertTable {
public:
    SchubertTable(std::shared_ptr<const WeylGroup> group, int max_len, SolveMode mode = SolveMode::Polynomial);

    const WeylGroup& group() const { return *group_; }
    int max_len() const { return max_len_; }
    SolveMode mode() const { return mode_; }

    /// All elements of W of length <= max_len, in (length, reduced word) order.
    std::size_t size() const { return elements_.size(); }
    const WeylElement& element(std::size_t k) const { return elements_[k]; }
    const std::vector<int>& word(std::size_t k) const { return words_[k]; }
    long length(std::size_t k) const { return static_cast<long>(words_[k].size()); }
    std::optional<std::size_t> find(const WeylElement& w) const;
    /// Throws std::out_of_range when w is longer than the table.
    std::size_t index(const WeylElement& w) const;
    /// Bruhat order read off the localization support.
    bool leq(std::size_t u, std::size_t v) const;

    /// xi^w(v). Polynomial mode only.
    const Polynomial& localization(std::size_t w, std::size_t v) const;
    /// xi^w(v) at alpha_i = 1.
    Integer localization_value(std::size_t w, std::size_t v) const;

    /// n_{u1 u2}^v, zero unless l(v) = l(u1) + l(u2). The triangular solve runs
    /// over W^P; P = Borel gives the G/B computation.
    Integer structure_constant(std::size_t u1, std::size_t u2, std::size_t v, const Parabolic& p) const;
    Integer structure_constant(std::size_t u1, std::size_t u2, std::size_t v) const;
    /// All nonzero n_{u1 u2}^v with l(v) = l(u1) + l(u2) <= max_len.
    std::map<std::size_t, Integer> product(std::size_t u1, std::size_t u2, const Parabolic& p) const;

    /// eps_{s_i} . eps_u by the Chevalley rule, restricted to the table.
    std::map<std::size_t, Integer> chevalley(int i, std::size_t u) const;

private:
    struct Solved;
    const Solved& solve(std::size_t u1, std::size_t u2, const Parabolic& p) const;
    std::vector<std::size_t> universe(const Parabolic& p) const;

    std::shared_ptr<const WeylGroup> group_;
    int max_len_;
    SolveMode mode_;
    std::vector<WeylElement> elements_;
    std::vector<std::vector<int>> words_;
    std::map<WeylElement, std::size_t> index_;
    std::vector<std::vector<IntVec>> top_factors_;  // xi^v(v) as a product of positive roots
    std::vector<std::vector<Polynomial>> poly_;     // poly_[v][w]
    std::vector<std::vector<Integer>> value_;       // value_[v][w]

    mutable std::mutex mutex_;
    mutable std::map<std::uint32_t, std::vector<std::size_t>> universes_;
    mutable std::map<std::tuple<std::uint32_t, std::size_t, std::size_t>, std::shared_ptr<Solved>> cache_;
};

/// Billey's formula evaluated literally: sum over reduced subwords of a fixed
/// reduced word of v that spell w.
Polynomial billey_restriction(const WeylGroup& group, const WeylElement& w, const WeylElement& v);

/// <-v^{-1}rho + u1^{-1}rho + u2^{-1}rho - rho, fundamental coweight i>.
long delta_shift(const WeylGroup& group, const WeylElement& u1, const WeylElement& u2, const WeylElement& v,
                 int i);
/// The same quantity as a signed sum over inversion sets.
long delta_shift_by_inversions(const WeylGroup& group, const WeylElement& u1, const WeylElement& u2,
                               const WeylElement& v, int i);

/// Deformed product coefficient: n_{u1 u2}^v when the shift vanishes, else 0.
Integer bkb_coefficient(const SchubertTable& table, std::size_t u1, std::size_t u2, std::size_t v, int i);

/// Counts of the alpha_i-coefficients over Phi_w.
std::map<long, long> levi_weight_profile(const WeylGroup& group, const WeylElement& w, int i);

struct MultiplicativityReport {
    WeylElement u1_bar, u2_bar, v_bar;
    WeylElement u1_tilde, u2_tilde, v_tilde;
    Integer n, n_bar, n_tilde;
    bool holds = false;
};

/// n = n_bar * n_tilde for P inside Q. Rejects triples violating either length
/// condition.
MultiplicativityReport check_multiplicativity(const SchubertTable& table, std::size_t u1, std::size_t u2,
                                              std::size_t v, const Parabolic& p, const Parabolic& q);

}  // namespace affcone
