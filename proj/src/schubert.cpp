#include "affcone/schubert.hpp"

#include <algorithm>

namespace affcone {

namespace {

std::uint32_t mask_of(const Parabolic& p)
{
    std::uint32_t m = 0;
    for (std::size_t j = 0; j < p.member.size(); ++j)
        if (p.member[j]) m |= 1u << j;
    return m;
}

Integer linear_value(const IntVec& coeffs)
{
    long s = 0;
    for (long c : coeffs) s += c;
    return Integer(s);
}

}  // namespace

struct SchubertTable::Solved {
    std::map<std::size_t, Polynomial> poly;
    std::map<std::size_t, Integer> value;
};

SchubertTable::SchubertTable(std::shared_ptr<const WeylGroup> group, int max_len, SolveMode mode)
    : group_(std::move(group)), max_len_(max_len), mode_(mode)
{
    if (max_len < 0) throw std::invalid_argument("max_len must be nonnegative");
    const WeylGroup& g = *group_;
    const int nodes = g.num_nodes();
    elements_ = g.enumerate_min_reps(Parabolic::borel(nodes), max_len);
    const std::size_t n = elements_.size();
    for (std::size_t k = 0; k < n; ++k) {
        words_.push_back(g.reduced_word(elements_[k]));
        index_.emplace(elements_[k], k);
    }

    // right[k][s]: index of w s when s is a right descent of w, else npos.
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> right(n, std::vector<std::size_t>(nodes, npos));
    for (std::size_t k = 0; k < n; ++k)
        for (int s = 0; s < nodes; ++s)
            if (g.is_right_descent(elements_[k], s)) right[k][s] = index_.at(g.multiply(elements_[k], g.simple(s)));

    top_factors_.assign(n, {});
    value_.assign(n, std::vector<Integer>(n, Integer(0)));
    if (mode_ == SolveMode::Polynomial) poly_.assign(n, std::vector<Polynomial>(n, Polynomial(nodes)));

    value_[0][0] = 1;
    if (mode_ == SolveMode::Polynomial) poly_[0][0] = Polynomial::constant(nodes, 1);
    for (std::size_t v = 1; v < n; ++v) {
        // xi^w(v' s) = xi^w(v') + [ws < w] v'(alpha_s) xi^{ws}(v')
        const int s = words_[v].back();
        const std::size_t vp = right[v][s];
        const IntVec root = g.affine_coords(g.act(elements_[vp], g.simple_root(s)));
        top_factors_[v] = top_factors_[vp];
        top_factors_[v].push_back(root);
        const Integer rv = linear_value(root);
        const Polynomial rp = Polynomial::linear(root);
        for (std::size_t w = 0; w < n; ++w) {
            value_[v][w] = value_[vp][w];
            if (right[w][s] != npos) value_[v][w] += rv * value_[vp][right[w][s]];
            if (mode_ == SolveMode::Polynomial) {
                poly_[v][w] = poly_[vp][w];
                if (right[w][s] != npos && !poly_[vp][right[w][s]].is_zero())
                    poly_[v][w] += rp * poly_[vp][right[w][s]];
            }
        }
    }
}

std::optional<std::size_t> SchubertTable::find(const WeylElement& w) const
{
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t SchubertTable::index(const WeylElement& w) const
{
    auto it = index_.find(w);
    if (it == index_.end())
        throw std::out_of_range("element " + group_->encode(w) + " lies beyond the table (max_len " +
                                std::to_string(max_len_) + ")");
    return it->second;
}

bool SchubertTable::leq(std::size_t u, std::size_t v) const { return value_[v][u] != 0; }

const Polynomial& SchubertTable::localization(std::size_t w, std::size_t v) const
{
    if (mode_ != SolveMode::Polynomial) throw std::logic_error("polynomial localization needs polynomial mode");
    return poly_[v][w];
}

Integer SchubertTable::localization_value(std::size_t w, std::size_t v) const { return value_[v][w]; }

std::vector<std::size_t> SchubertTable::universe(const Parabolic& p) const
{
    const std::uint32_t key = mask_of(p);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = universes_.find(key);
        if (it != universes_.end()) return it->second;
    }
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < elements_.size(); ++k)
        if (group_->is_min_rep(elements_[k], p)) out.push_back(k);
    std::lock_guard<std::mutex> lock(mutex_);
    universes_.emplace(key, out);
    return out;
}

const SchubertTable::Solved& SchubertTable::solve(std::size_t u1, std::size_t u2, const Parabolic& p) const
{
    const auto key = std::make_tuple(mask_of(p), u1, u2);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }
    auto out = std::make_shared<Solved>();
    const long l1 = length(u1);
    const long l2 = length(u2);
    const long lo = std::max(l1, l2);
    const long hi = std::min<long>(l1 + l2, max_len_);
    std::vector<std::size_t> done;
    for (std::size_t z : universe(p)) {
        const long lz = length(z);
        if (lz < lo || lz > hi || !leq(u1, z) || !leq(u2, z)) continue;
        if (mode_ == SolveMode::Polynomial) {
            Polynomial acc = poly_[z][u1] * poly_[z][u2];
            for (std::size_t y : done)
                if (y != z && leq(y, z)) acc -= out->poly.at(y) * poly_[z][y];
            for (const auto& f : top_factors_[z]) acc = acc.divide_exact(f);
            if (!acc.is_homogeneous(static_cast<int>(l1 + l2 - lz)))
                throw ConsistencyError("equivariant structure constant has the wrong degree");
            if (!acc.is_zero()) {
                out->value[z] = acc.evaluate(IntVec(group_->num_nodes(), 1));
                out->poly.emplace(z, std::move(acc));
                done.push_back(z);
            }
        } else {
            Integer acc = value_[z][u1] * value_[z][u2];
            for (std::size_t y : done)
                if (y != z && leq(y, z)) acc -= out->value.at(y) * value_[z][y];
            Integer denom = 1;
            for (const auto& f : top_factors_[z]) denom *= linear_value(f);
            if (!mpz_divisible_p(acc.get_mpz_t(), denom.get_mpz_t()))
                throw ConsistencyError("inexact division in the evaluated triangular solve");
            acc /= denom;
            if (acc != 0) {
                out->value[z] = acc;
                done.push_back(z);
            }
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(key, std::move(out));
    return *it->second;
}

Integer SchubertTable::structure_constant(std::size_t u1, std::size_t u2, std::size_t v, const Parabolic& p) const
{
    const auto uni = universe(p);
    for (std::size_t x : {u1, u2, v})
        if (!std::binary_search(uni.begin(), uni.end(), x))
            throw std::invalid_argument("element " + group_->encode(elements_[x]) +
                                        " is not a minimal coset representative");
    if (length(v) != length(u1) + length(u2)) return 0;
    const Solved& s = solve(u1, u2, p);
    auto it = s.value.find(v);
    if (it == s.value.end()) return 0;
    if (mode_ == SolveMode::Polynomial && !s.poly.at(v).is_constant())
        throw ConsistencyError("top-degree structure constant is not a constant");
    return it->second;
}

Integer SchubertTable::structure_constant(std::size_t u1, std::size_t u2, std::size_t v) const
{
    return structure_constant(u1, u2, v, Parabolic::borel(group_->num_nodes()));
}

std::map<std::size_t, Integer> SchubertTable::product(std::size_t u1, std::size_t u2, const Parabolic& p) const
{
    std::map<std::size_t, Integer> out;
    const long top = length(u1) + length(u2);
    if (top > max_len_) return out;
    const Solved& s = solve(u1, u2, p);
    for (const auto& [z, c] : s.value)
        if (length(z) == top) out[z] = c;
    return out;
}

std::map<std::size_t, Integer> SchubertTable::chevalley(int i, std::size_t u) const
{
    const WeylGroup& g = *group_;
    const auto& data = g.data();
    const WeylElement& w = elements_[u];
    const long lu = length(u);
    std::map<std::size_t, Integer> out;
    // l(s_beta) <= 2 l(u) + 1 forces |n| <= l(u) + 1 for beta = alpha + n delta.
    for (long n = 0; n <= lu + 1; ++n)
        for (const auto& fin : data.finite().positive_roots())
            for (int sign : {1, -1}) {
                if (n == 0 && sign < 0) continue;
                const RealRoot beta{scale(fin, sign), n};
                const WeylElement x = g.multiply(w, g.reflection(beta));
                if (g.length(x) != lu + 1) continue;
                auto k = find(x);
                if (!k) continue;
                const Rational c = data.pair(data.fundamental_weight(i), g.coroot(beta));
                if (c != 0) out[*k] += Integer(to_long_exact(c));
            }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Polynomial billey_restriction(const WeylGroup& group, const WeylElement& w, const WeylElement& v)
{
    const std::vector<int> word = group.reduced_word(v);
    const long lw = group.length(w);
    const std::size_t k = word.size();
    std::vector<IntVec> roots;
    WeylElement prefix = group.identity();
    for (int b : word) {
        roots.push_back(group.affine_coords(group.act(prefix, group.simple_root(b))));
        prefix = group.multiply(prefix, group.simple(b));
    }
    Polynomial total(group.num_nodes());
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        if (__builtin_popcountll(mask) != lw) continue;
        std::vector<int> sub;
        for (std::size_t j = 0; j < k; ++j)
            if (mask & (std::size_t{1} << j)) sub.push_back(word[j]);
        if (!(group.from_word(sub) == w)) continue;
        Polynomial term = Polynomial::constant(group.num_nodes(), 1);
        for (std::size_t j = 0; j < k; ++j)
            if (mask & (std::size_t{1} << j)) term = term * Polynomial::linear(roots[j]);
        total += term;
    }
    return total;
}

long delta_shift(const WeylGroup& group, const WeylElement& u1, const WeylElement& u2, const WeylElement& v, int i)
{
    const auto& data = group.data();
    const AffineCoweight tau = data.fundamental_coweight(i);
    const AffineWeight rho = data.rho();
    const Rational r = -data.pair(rho, group.act(v, tau)) + data.pair(rho, group.act(u1, tau)) +
                       data.pair(rho, group.act(u2, tau)) - data.pair(rho, tau);
    return to_long_exact(r);
}

long delta_shift_by_inversions(const WeylGroup& group, const WeylElement& u1, const WeylElement& u2,
                               const WeylElement& v, int i)
{
    const auto& data = group.data();
    const AffineCoweight tau = data.fundamental_coweight(i);
    auto sum = [&](const WeylElement& w) {
        Rational s = 0;
        for (const auto& beta : group.inversion_set(w)) s += data.pair(group.as_weight(beta), tau);
        return s;
    };
    return to_long_exact(-sum(v) + sum(u1) + sum(u2));
}

Integer bkb_coefficient(const SchubertTable& table, std::size_t u1, std::size_t u2, std::size_t v, int i)
{
    const WeylGroup& g = table.group();
    if (table.length(v) != table.length(u1) + table.length(u2)) return 0;
    if (delta_shift(g, table.element(u1), table.element(u2), table.element(v), i) != 0) return 0;
    return table.structure_constant(u1, u2, v, Parabolic::maximal(g.num_nodes(), i));
}

std::map<long, long> levi_weight_profile(const WeylGroup& group, const WeylElement& w, int i)
{
    if (!group.is_min_rep(w, Parabolic::maximal(group.num_nodes(), i)))
        throw std::invalid_argument("profile needs a minimal coset representative");
    std::map<long, long> out;
    for (const auto& beta : group.inversion_set(w)) ++out[group.affine_coords(beta)[i]];
    return out;
}

MultiplicativityReport check_multiplicativity(const SchubertTable& table, std::size_t u1, std::size_t u2,
                                              std::size_t v, const Parabolic& p, const Parabolic& q)
{
    const WeylGroup& g = table.group();
    MultiplicativityReport r;
    std::tie(r.u1_bar, r.u1_tilde) = g.coset_factorize(table.element(u1), p, q);
    std::tie(r.u2_bar, r.u2_tilde) = g.coset_factorize(table.element(u2), p, q);
    std::tie(r.v_bar, r.v_tilde) = g.coset_factorize(table.element(v), p, q);
    if (table.length(v) != table.length(u1) + table.length(u2))
        throw std::invalid_argument("multiplicativity needs l(v) = l(u1) + l(u2)");
    if (g.length(r.v_bar) != g.length(r.u1_bar) + g.length(r.u2_bar))
        throw std::invalid_argument("multiplicativity needs l(v_bar) = l(u1_bar) + l(u2_bar)");
    r.n = table.structure_constant(u1, u2, v, p);
    r.n_bar = table.structure_constant(table.index(r.u1_bar), table.index(r.u2_bar), table.index(r.v_bar), q);
    r.n_tilde =
        table.structure_constant(table.index(r.u1_tilde), table.index(r.u2_tilde), table.index(r.v_tilde), p);
    r.holds = r.n == r.n_bar * r.n_tilde;
    return r;
}

}  // namespace affcone
