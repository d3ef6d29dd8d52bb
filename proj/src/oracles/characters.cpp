#include "affcone/oracles/characters.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace affcone::oracle {

BoxSeries::BoxSeries(IntVec bound) : bound_(std::move(bound))
{
    std::size_t n = 1;
    for (long b : bound_) {
        if (b < 0) throw std::invalid_argument("negative box bound");
        n *= static_cast<std::size_t>(b + 1);
    }
    coef_.assign(n, Integer(0));
}

bool BoxSeries::contains(const IntVec& beta) const
{
    for (std::size_t i = 0; i < bound_.size(); ++i)
        if (beta[i] < 0 || beta[i] > bound_[i]) return false;
    return true;
}

std::size_t BoxSeries::index(const IntVec& beta) const
{
    std::size_t k = 0;
    for (std::size_t i = 0; i < bound_.size(); ++i) k = k * (bound_[i] + 1) + beta[i];
    return k;
}

IntVec BoxSeries::point(std::size_t k) const
{
    IntVec beta(bound_.size());
    for (std::size_t i = bound_.size(); i-- > 0;) {
        beta[i] = static_cast<long>(k % (bound_[i] + 1));
        k /= (bound_[i] + 1);
    }
    return beta;
}

Integer BoxSeries::at(const IntVec& beta) const
{
    return contains(beta) ? coef_[index(beta)] : Integer(0);
}

BoxSeries weyl_kac_character(const IntMat& cartan, const std::vector<SeriesRoot>& roots, const IntVec& labels,
                             const IntVec& bound)
{
    const std::size_t n = labels.size();
    BoxSeries f(bound);

    std::set<IntVec> seen;
    std::deque<std::pair<IntVec, int>> queue;
    IntVec zero(n, 0);
    seen.insert(zero);
    queue.emplace_back(zero, 1);
    while (!queue.empty()) {
        auto [eta, sign] = queue.front();
        queue.pop_front();
        f[f.index(eta)] += sign;
        for (std::size_t i = 0; i < n; ++i) {
            long a = labels[i] + 1;
            for (std::size_t j = 0; j < n; ++j) a -= cartan[i][j] * eta[j];
            if (a <= 0) continue;
            IntVec next = eta;
            next[i] += a;
            if (!f.contains(next) || !seen.insert(next).second) continue;
            queue.emplace_back(next, -sign);
        }
    }

    // Multiply by 1/(1 - e^{-alpha}) once per unit of multiplicity. The index
    // order is compatible with adding a nonnegative vector.
    for (const SeriesRoot& r : roots)
        for (long t = 0; t < r.mult; ++t)
            for (std::size_t k = 0; k < f.size(); ++k) {
                IntVec beta = f.point(k);
                bool inside = true;
                for (std::size_t i = 0; i < n; ++i) {
                    beta[i] -= r.coords[i];
                    if (beta[i] < 0) inside = false;
                }
                if (inside) f[k] += f[f.index(beta)];
            }
    return f;
}

std::vector<SeriesRoot> affine_roots(const AffineRootData& data, const IntVec& bound)
{
    const FiniteRootData& fd = data.finite();
    const int l = fd.rank();
    std::vector<SeriesRoot> out;
    auto keep = [&](const IntVec& c, long mult) {
        for (int i = 0; i <= l; ++i)
            if (c[i] > bound[i]) return;
        out.push_back({c, mult});
    };
    for (long n = 0; n <= bound[0]; ++n) {
        for (const IntVec& r : fd.positive_roots()) {
            IntVec up(l + 1), down(l + 1);
            up[0] = down[0] = n;
            for (int j = 0; j < l; ++j) {
                up[j + 1] = r[j] + n * data.theta()[j];
                down[j + 1] = -r[j] + n * data.theta()[j];
            }
            keep(up, 1);
            if (n > 0) keep(down, 1);
        }
        if (n > 0) {
            IntVec im(l + 1);
            for (int j = 0; j <= l; ++j) im[j] = n * data.marks()[j];
            keep(im, l);
        }
    }
    return out;
}

std::vector<SeriesRoot> finite_roots(const FiniteRootData& fd)
{
    std::vector<SeriesRoot> out;
    for (const IntVec& r : fd.positive_roots()) out.push_back({r, 1});
    return out;
}

IntVec affine_box(const AffineRootData& data, const AffineWeight& lambda, long depth)
{
    // Weights nu at delta-degree k satisfy |nu_dot|^2 <= |lambda_dot|^2 + 2 level k,
    // and the j-th root coordinate of a finite weight x is 2 (x, w_j) / |alpha_j|^2.
    const FiniteRootData& fd = data.finite();
    const int l = fd.rank();
    const Rational r2 = fd.weight_form(lambda.dot, lambda.dot) + 2 * lambda.level * depth;
    const RatVec top = fd.labels_to_root_coords(lambda.dot);
    IntVec bound(l + 1);
    bound[0] = depth;
    for (int j = 0; j < l; ++j) {
        const Rational reach = sqrt_upper(r2 * fd.weight_gram()[j][j]) * 2 / fd.simple_root_norms()[j];
        bound[j + 1] = to_long(floor_of(top[j] + reach + Rational(depth * data.theta()[j])));
        bound[j + 1] = std::max(bound[j + 1], 0L);
    }
    return bound;
}

namespace {

IntVec affine_int_labels(const AffineRootData& data, const AffineWeight& w)
{
    if (!w.is_integral()) throw std::invalid_argument("weight is not integral");
    IntVec out;
    for (const Rational& a : data.affine_labels(w)) out.push_back(to_long_exact(a));
    for (long a : out)
        if (a < 0) throw std::invalid_argument("weight is not dominant");
    return out;
}

/// Peels characters off a truncated W-invariant series whose top is the weight with `labels`.
std::map<IntVec, Integer> peel(const IntMat& cartan, const std::vector<SeriesRoot>& roots, const IntVec& labels,
                               BoxSeries product)
{
    const std::size_t n = labels.size();
    std::vector<std::size_t> order(product.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<long> height(product.size());
    for (std::size_t k = 0; k < product.size(); ++k) {
        const IntVec p = product.point(k);
        height[k] = std::accumulate(p.begin(), p.end(), 0L);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return height[a] < height[b]; });

    std::map<IntVec, Integer> out;
    for (std::size_t k : order) {
        const Integer c = product[k];
        if (c == 0) continue;
        const IntVec beta = product.point(k);
        IntVec lab = labels;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) lab[i] -= cartan[i][j] * beta[j];
        if (std::any_of(lab.begin(), lab.end(), [](long x) { return x < 0; }))
            throw ConsistencyError("highest remaining weight of a character is not dominant");
        if (c < 0) throw ConsistencyError("negative coefficient while peeling characters");
        out[beta] = c;
        IntVec sub_bound = product.bound();
        for (std::size_t i = 0; i < n; ++i) sub_bound[i] -= beta[i];
        const BoxSeries ch = weyl_kac_character(cartan, roots, lab, sub_bound);
        for (std::size_t m = 0; m < ch.size(); ++m) {
            if (ch[m] == 0) continue;
            IntVec g = ch.point(m);
            for (std::size_t i = 0; i < n; ++i) g[i] += beta[i];
            product[product.index(g)] -= c * ch[m];
        }
    }
    return out;
}

BoxSeries multiply(const BoxSeries& a, const BoxSeries& b, const IntVec& bound)
{
    BoxSeries out(bound);
    const std::size_t n = bound.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const IntVec pa = a.point(i);
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            IntVec pb = b.point(j);
            bool inside = true;
            for (std::size_t k = 0; k < n; ++k) {
                pb[k] += pa[k];
                if (pb[k] > bound[k]) inside = false;
            }
            if (inside) out[out.index(pb)] += a[i] * b[j];
        }
    }
    return out;
}

IntVec finite_box(const FiniteRootData& fd, const IntVec& labels)
{
    const RatVec top = fd.labels_to_root_coords(to_rational(labels));
    Rational m = 0;
    for (const Rational& x : top) m = std::max(m, x);
    return IntVec(fd.rank(), to_long(floor_of(2 * m)));
}

}  // namespace

BoxSeries affine_character(const AffineRootData& data, const AffineWeight& lambda, long depth)
{
    const IntVec bound = affine_box(data, lambda, depth);
    return weyl_kac_character(data.cartan(), affine_roots(data, bound), affine_int_labels(data, lambda), bound);
}

std::map<IntVec, Integer> affine_tensor_by_peeling(const AffineRootData& data, const AffineWeight& lambda1,
                                                   const AffineWeight& lambda2, long depth)
{
    const AffineWeight top = lambda1 + lambda2;
    const IntVec bound = affine_box(data, top, depth);
    const auto roots = affine_roots(data, bound);
    const BoxSeries c1 = weyl_kac_character(data.cartan(), roots, affine_int_labels(data, lambda1), bound);
    const BoxSeries c2 = weyl_kac_character(data.cartan(), roots, affine_int_labels(data, lambda2), bound);
    return peel(data.cartan(), roots, affine_int_labels(data, top), multiply(c1, c2, bound));
}

std::map<IntVec, Integer> finite_tensor_by_peeling(const FiniteRootData& fd, const IntVec& lambda1,
                                                   const IntVec& lambda2)
{
    const IntVec top = add(lambda1, lambda2);
    const IntVec bound = finite_box(fd, top);
    const auto roots = finite_roots(fd);
    const BoxSeries c1 = weyl_kac_character(fd.cartan(), roots, lambda1, bound);
    const BoxSeries c2 = weyl_kac_character(fd.cartan(), roots, lambda2, bound);
    std::map<IntVec, Integer> out;
    for (const auto& [beta, c] : peel(fd.cartan(), roots, top, multiply(c1, c2, bound)))
        out[sub(top, mat_vec(fd.cartan(), beta))] = c;
    return out;
}

std::map<IntVec, Integer> finite_dominant_character(const FiniteRootData& fd, const IntVec& labels)
{
    const IntVec bound = finite_box(fd, labels);
    const BoxSeries ch = weyl_kac_character(fd.cartan(), finite_roots(fd), labels, bound);
    std::map<IntVec, Integer> out;
    for (std::size_t k = 0; k < ch.size(); ++k) {
        if (ch[k] == 0) continue;
        const IntVec lab = sub(labels, mat_vec(fd.cartan(), ch.point(k)));
        if (std::all_of(lab.begin(), lab.end(), [](long x) { return x >= 0; })) out[lab] = ch[k];
    }
    return out;
}

}  // namespace affcone::oracle
