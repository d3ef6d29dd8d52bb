#include "affcone/polynomial.hpp"

#include <algorithm>

namespace affcone {

Polynomial Polynomial::constant(int nvars, const Integer& c)
{
    Polynomial p(nvars);
    p.add_term(Monomial{}, c);
    return p;
}

Polynomial Polynomial::linear(const IntVec& coeffs)
{
    if (coeffs.size() > static_cast<std::size_t>(max_vars)) throw std::invalid_argument("too many variables");
    Polynomial p(static_cast<int>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Monomial m{};
        m[i] = 1;
        p.add_term(m, Integer(coeffs[i]));
    }
    return p;
}

void Polynomial::add_term(const Monomial& m, const Integer& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Integer Polynomial::constant_term() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Integer(0) : it->second;
}

int Polynomial::degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (auto e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

bool Polynomial::is_homogeneous(int d) const
{
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (auto e : m) s += e;
        if (s != d) return false;
    }
    return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    Polynomial r(std::max(nvars_, o.nvars_));
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            for (int i = 0; i < max_vars; ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
            r.add_term(m, ca * cb);
        }
    return r;
}

Polynomial Polynomial::operator*(const Integer& s) const
{
    Polynomial r(nvars_);
    if (s == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

Polynomial Polynomial::divide_exact(const IntVec& coeffs) const
{
    int k = -1;
    for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
        if (coeffs[i] != 0) k = i;
    if (k < 0) throw ConsistencyError("division by the zero linear form");
    const Integer ck = coeffs[k];
    const int nv = std::max(nvars_, static_cast<int>(coeffs.size()));

    // this = sum_e P_e x_k^e and divisor = ck x_k + rest.
    std::map<int, Polynomial> slices;
    for (const auto& [m, c] : terms_) {
        Monomial r = m;
        const int e = r[k];
        r[k] = 0;
        auto it = slices.try_emplace(e, Polynomial(nv)).first;
        it->second.add_term(r, c);
    }
    IntVec rest_coeffs = coeffs;
    rest_coeffs[k] = 0;
    const Polynomial rest = Polynomial::linear(rest_coeffs);

    Polynomial quotient(nv);
    if (slices.empty()) return quotient;
    const int top = slices.rbegin()->first;
    Polynomial q_prev(nv);  // Q_{e} from the previous step
    for (int e = top; e >= 1; --e) {
        Polynomial r = slices.count(e) ? slices.at(e) : Polynomial(nv);
        r -= rest * q_prev;
        Polynomial q(nv);
        for (const auto& [m, c] : r.terms_) {
            if (!mpz_divisible_p(c.get_mpz_t(), ck.get_mpz_t()))
                throw ConsistencyError("inexact division by a linear form");
            q.terms_.emplace(m, Integer(c / ck));
        }
        for (const auto& [m, c] : q.terms_) {
            Monomial mm = m;
            mm[k] = static_cast<std::uint16_t>(e - 1);
            quotient.terms_.emplace(mm, c);
        }
        q_prev = std::move(q);
    }
    Polynomial tail = slices.count(0) ? slices.at(0) : Polynomial(nv);
    tail -= rest * q_prev;
    if (!tail.is_zero()) throw ConsistencyError("inexact division by a linear form");
    return quotient;
}

Integer Polynomial::evaluate(const IntVec& point) const
{
    Integer total = 0;
    for (const auto& [m, c] : terms_) {
        Integer t = c;
        for (int i = 0; i < max_vars; ++i)
            if (m[i]) {
                Integer p;
                mpz_pow_ui(p.get_mpz_t(), Integer(point.at(i)).get_mpz_t(), m[i]);
                t *= p;
            }
        total += t;
    }
    return total;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        for (int i = 0; i < max_vars; ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += "a" + std::to_string(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        Integer a = abs(c);
        std::string term;
        if (mono.empty()) term = a.get_str();
        else if (a == 1) term = mono;
        else term = a.get_str() + "*" + mono;
        if (out.empty()) out = (c < 0 ? "-" : "") + term;
        else out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace affcone
