#pragma once

#include "affcone/arith.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace affcone {

/// Sparse polynomial with integer coefficients in at most 9 variables
/// (the simple roots alpha_0..alpha_l of an affine type of rank <= 8).
class Polynomial {
public:
    static constexpr int max_vars = 9;
    using Monomial = std::array<std::uint16_t, max_vars>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
    static Polynomial constant(int nvars, const Integer& c);
    static Polynomial linear(const IntVec& coeffs);

    int num_vars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Integer constant_term() const;
    int degree() const;  // -1 for zero
    bool is_homogeneous(int d) const;
    const std::map<Monomial, Integer>& terms() const { return terms_; }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Integer& s) const;
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// this / (sum_i coeffs[i] x_i). Throws ConsistencyError if the division
    /// is not exact over the integers.
    Polynomial divide_exact(const IntVec& coeffs) const;

    Integer evaluate(const IntVec& point) const;

    /// "2*a0^2 + a0*a1 - 3" style rendering with variables a0..a{n-1}.
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Integer& c);

    int nvars_ = 0;
    std::map<Monomial, Integer> terms_;
};

}  // namespace affcone
