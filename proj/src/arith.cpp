#include "affcone/arith.hpp"

#include <climits>
#include <numeric>

namespace affcone {

Integer floor_of(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

long to_long(const Integer& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer does not fit in a machine word: " + z.get_str());
    return z.get_si();
}

long to_long_exact(const Rational& q)
{
    if (!is_integral(q))
        throw std::invalid_argument("expected an integer, got " + to_string(q));
    return to_long(q.get_num());
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

long lcm_of(const IntVec& values)
{
    long acc = 1;
    for (long v : values)
        if (v != 0) acc = std::lcm(acc, v < 0 ? -v : v);
    return acc;
}

namespace {

// floor(sqrt(q * 4^bits)) as an integer.
Integer scaled_isqrt(const Rational& q, unsigned bits)
{
    if (q < 0) throw std::invalid_argument("square root of a negative rational");
    Integer scale = 1;
    scale <<= 2 * bits;
    Integer fl = floor_of(q * Rational(scale));
    Integer r;
    mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
    return r;
}

}  // namespace

Rational sqrt_lower(const Rational& q, unsigned bits)
{
    Integer r = scaled_isqrt(q, bits);
    Integer den = 1;
    den <<= bits;
    Rational out(r, den);
    out.canonicalize();
    return out;
}

Rational sqrt_upper(const Rational& q, unsigned bits)
{
    Integer r = scaled_isqrt(q, bits);
    Integer den = 1;
    den <<= bits;
    Rational exact(r, den);
    exact.canonicalize();
    if (exact * exact == q) return exact;
    Rational out(r + 1, den);
    out.canonicalize();
    return out;
}

RatVec to_rational(const IntVec& v)
{
    RatVec out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

Rational dot(const RatVec& a, const RatVec& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IntVec& a, const RatVec& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

long dot(const IntVec& a, const IntVec& b)
{
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec add(const RatVec& a, const RatVec& b)
{
    RatVec out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

RatVec sub(const RatVec& a, const RatVec& b)
{
    RatVec out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

RatVec scale(const RatVec& a, const Rational& s)
{
    RatVec out(a);
    for (auto& x : out) x *= s;
    return out;
}

IntVec add(const IntVec& a, const IntVec& b)
{
    IntVec out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

IntVec sub(const IntVec& a, const IntVec& b)
{
    IntVec out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

IntVec scale(const IntVec& a, long s)
{
    IntVec out(a);
    for (auto& x : out) x *= s;
    return out;
}

IntVec mat_vec(const IntMat& m, const IntVec& v)
{
    IntVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
    return out;
}

RatVec mat_vec(const IntMat& m, const RatVec& v)
{
    RatVec out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
    return out;
}

RatVec mat_vec(const RatMat& m, const RatVec& v)
{
    RatVec out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
    return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b)
{
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k == 0 ? 0 : b[0].size();
    IntMat out(n, IntVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            const long x = a[i][t];
            if (x == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += x * b[t][j];
        }
    return out;
}

IntMat transpose(const IntMat& m)
{
    if (m.empty()) return {};
    IntMat out(m[0].size(), IntVec(m.size(), 0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

IntMat identity_matrix(std::size_t n)
{
    IntMat out(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

RatMat inverse(const IntMat& m)
{
    const std::size_t n = m.size();
    RatMat a(n, RatVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        for (std::size_t j = 0; j < n; ++j) a[i][n + j] = (i == j) ? 1 : 0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("singular matrix");
        std::swap(a[piv], a[col]);
        const Rational p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    RatMat out(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

}  // namespace affcone
