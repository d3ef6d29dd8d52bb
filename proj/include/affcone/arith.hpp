#pragma once

// Exact arithmetic primitives shared by every module: GMP integers and
// rationals, small integer vectors/matrices for lattice data, and rational
// square-root brackets used wherever a norm has to be compared exactly.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace affcone {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<long>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/// Raised when an internal identity that must hold exactly fails
/// (non-exact division, inconsistent oracle, ...).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
bool is_integral(const Rational& q);
long to_long(const Integer& z);
long to_long_exact(const Rational& q);  // throws unless integral and in range

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

long lcm_of(const IntVec& values);

// Rational r with r*r <= q (resp. r*r >= q); |r - sqrt(q)| <= 2^-bits.
Rational sqrt_lower(const Rational& q, unsigned bits = 24);
Rational sqrt_upper(const Rational& q, unsigned bits = 24);

RatVec to_rational(const IntVec& v);
Rational dot(const RatVec& a, const RatVec& b);
Rational dot(const IntVec& a, const RatVec& b);
long dot(const IntVec& a, const IntVec& b);

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rational& s);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, long s);

IntVec mat_vec(const IntMat& m, const IntVec& v);
RatVec mat_vec(const IntMat& m, const RatVec& v);
RatVec mat_vec(const RatMat& m, const RatVec& v);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat transpose(const IntMat& m);
IntMat identity_matrix(std::size_t n);

// Gauss-Jordan inverse over Q; throws std::invalid_argument if singular.
RatMat inverse(const IntMat& m);

}  // namespace affcone
