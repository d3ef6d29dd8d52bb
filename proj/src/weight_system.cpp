#include "weight_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace affcone::detail {

namespace {

long height(const IntVec& v)
{
    return std::accumulate(v.begin(), v.end(), 0L);
}

bool height_order(const IntVec& a, const IntVec& b)
{
    const long ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
}

void finish_gram(WeightSystem& sys)
{
    const std::size_t n = sys.cartan.size();
    sys.gram.assign(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sys.gram[i][j] = sys.half_norms[i] * sys.cartan[i][j];
}

}  // namespace

WeightSystem affine_system(const AffineRootData& data, long depth)
{
    const FiniteRootData& fd = data.finite();
    const int l = fd.rank();
    WeightSystem sys;
    sys.affine = true;
    sys.cartan = data.cartan();
    sys.half_norms.assign(l + 1, Rational(1));
    for (int i = 0; i < l; ++i) sys.half_norms[i + 1] = fd.simple_root_norms()[i] / 2;
    finish_gram(sys);

    const IntVec& theta = data.theta();
    for (long n = 0; n <= depth; ++n) {
        for (const IntVec& r : fd.positive_roots())
            for (int sgn : {1, -1}) {
                if (n == 0 && sgn < 0) continue;
                IntVec c(l + 1);
                c[0] = n;
                for (int j = 0; j < l; ++j) c[j + 1] = sgn * r[j] + n * theta[j];
                sys.roots.push_back({c, 1});
            }
        if (n > 0) sys.roots.push_back({scale(data.marks(), n), l});
    }
    return sys;
}

WeightSystem finite_system(const FiniteRootData& fd)
{
    WeightSystem sys;
    sys.cartan = fd.cartan();
    for (const Rational& x : fd.simple_root_norms()) sys.half_norms.push_back(x / 2);
    finish_gram(sys);
    for (const IntVec& r : fd.positive_roots()) sys.roots.push_back({r, 1});
    return sys;
}

Rational beta_form(const WeightSystem& sys, const IntVec& a, const IntVec& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j]) s += sys.gram[i][j] * a[i] * b[j];
    }
    return s;
}

Rational label_pairing(const WeightSystem& sys, const IntVec& labels, const IntVec& beta)
{
    Rational s = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) s += sys.half_norms[i] * labels[i] * beta[i];
    return s;
}

IntVec shifted_labels(const WeightSystem& sys, const IntVec& labels, const IntVec& beta)
{
    IntVec out = labels;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < beta.size(); ++j) out[i] -= sys.cartan[i][j] * beta[j];
    return out;
}

std::optional<IntVec> dominant_beta(const WeightSystem& sys, const IntVec& labels, IntVec beta)
{
    IntVec lab = shifted_labels(sys, labels, beta);
    const std::size_t n = lab.size();
    for (;;) {
        std::size_t i = 0;
        while (i < n && lab[i] >= 0) ++i;
        if (i == n) return beta;
        const long t = lab[i];
        beta[i] += t;
        if (beta[i] < 0) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) lab[j] -= sys.cartan[j][i] * t;
    }
}

Rational norm_gap(const WeightSystem& sys, const IntVec& labels, const IntVec& beta)
{
    return 2 * label_pairing(sys, labels, beta) - beta_form(sys, beta, beta);
}

FreudenthalTable::FreudenthalTable(std::shared_ptr<const WeightSystem> system, IntVec labels,
                                   std::vector<IntVec> candidates, long depth)
    : sys_(std::move(system)), labels_(std::move(labels)), depth_(depth)
{
    const WeightSystem& sys = *sys_;
    std::sort(candidates.begin(), candidates.end(), height_order);
    const std::size_t n = labels_.size();
    RatVec lam_rho(n);
    for (std::size_t i = 0; i < n; ++i) lam_rho[i] = sys.half_norms[i] * (labels_[i] + 1);

    for (const IntVec& beta : candidates) {
        if (height(beta) == 0) {
            mult_[beta] = 1;
            continue;
        }
        Rational lhs = -beta_form(sys, beta, beta);
        for (std::size_t i = 0; i < n; ++i) lhs += 2 * lam_rho[i] * beta[i];
        if (lhs <= 0)
            throw ConsistencyError("vanishing Freudenthal denominator at a dominant weight below the highest weight");

        Rational rhs = 0;
        for (const PositiveRoot& root : sys.roots) {
            const Rational base = label_pairing(sys, labels_, root.coords) - beta_form(sys, beta, root.coords);
            const Rational step = beta_form(sys, root.coords, root.coords);
            IntVec gamma = beta;
            for (long j = 1;; ++j) {
                bool inside = true;
                for (std::size_t i = 0; i < n; ++i) {
                    gamma[i] -= root.coords[i];
                    if (gamma[i] < 0) inside = false;
                }
                if (!inside) break;
                auto dom = dominant_beta(sys, labels_, gamma);
                if (!dom) continue;
                auto it = mult_.find(*dom);
                if (it == mult_.end()) continue;
                rhs += 2 * root.mult * (base + step * j) * Rational(it->second);
            }
        }
        const Rational m = rhs / lhs;
        if (!is_integral(m) || m < 0) throw ConsistencyError("Freudenthal recursion produced a non-integral value");
        if (m != 0) mult_[beta] = m.get_num();
    }
}

std::optional<Integer> FreudenthalTable::multiplicity(const IntVec& beta) const
{
    auto dom = dominant_beta(*sys_, labels_, beta);
    if (!dom) return Integer(0);
    if (sys_->affine && (*dom)[0] > depth_) return std::nullopt;
    auto it = mult_.find(*dom);
    return it == mult_.end() ? Integer(0) : it->second;
}

std::vector<IntVec> affine_dominant_candidates(const AffineRootData& data, const IntVec& labels, long depth)
{
    const FiniteRootData& fd = data.finite();
    const int l = fd.rank();
    long level = 0;
    for (int i = 0; i <= l; ++i) level += data.comarks()[i] * labels[i];
    const IntVec& tc = data.theta_check();
    const IntVec& theta = data.theta();
    const RatMat ainv = inverse(fd.cartan());
    const RatVec top = mat_vec(ainv, RatVec(labels.begin() + 1, labels.end()));

    std::vector<IntVec> out;
    IntVec dot(l, 0);
    std::function<void(int, long)> rec = [&](int j, long budget) {
        if (j == l) {
            const RatVec base = sub(top, mat_vec(ainv, to_rational(dot)));
            for (long k = 0; k <= depth; ++k) {
                IntVec beta(l + 1);
                beta[0] = k;
                bool ok = true;
                for (int i = 0; i < l && ok; ++i) {
                    const Rational r = base[i] + k * theta[i];
                    if (!is_integral(r) || r < 0) ok = false;
                    else beta[i + 1] = to_long_exact(r);
                }
                if (ok) out.push_back(beta);
            }
            return;
        }
        for (long a = 0; a * tc[j] <= budget; ++a) {
            dot[j] = a;
            rec(j + 1, budget - a * tc[j]);
        }
        dot[j] = 0;
    };
    if (level >= 0) rec(0, level);
    return out;
}

std::vector<IntVec> finite_dominant_candidates(const FiniteRootData& fd, const IntVec& labels)
{
    const int n = fd.rank();
    const RatVec top = mat_vec(inverse(fd.cartan()), to_rational(labels));
    IntVec bound(n);
    for (int i = 0; i < n; ++i) bound[i] = to_long(floor_of(top[i]));
    std::vector<IntVec> out;
    IntVec beta(n, 0);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            IntVec lab = labels;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) lab[i] -= fd.cartan()[i][k] * beta[k];
            if (std::all_of(lab.begin(), lab.end(), [](long x) { return x >= 0; })) out.push_back(beta);
            return;
        }
        for (long b = 0; b <= bound[j]; ++b) {
            beta[j] = b;
            rec(j + 1);
        }
        beta[j] = 0;
    };
    rec(0);
    return out;
}

std::vector<OrbitPoint> descending_orbit(const IntMat& cartan, const IntVec& labels,
                                         const std::function<bool(const IntVec&)>& stop)
{
    const std::size_t n = labels.size();
    std::vector<OrbitPoint> out;
    std::set<IntVec> seen;
    std::deque<std::pair<IntVec, int>> queue;
    IntVec zero(n, 0);
    if (stop(zero)) return out;
    seen.insert(zero);
    queue.emplace_back(zero, 1);
    while (!queue.empty()) {
        auto [eta, sign] = queue.front();
        queue.pop_front();
        IntVec lab = labels;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) lab[i] -= cartan[i][j] * eta[j];
        for (std::size_t i = 0; i < n; ++i) {
            if (lab[i] <= 0) continue;
            IntVec next = eta;
            next[i] += lab[i];
            if (seen.count(next) || stop(next)) continue;
            seen.insert(next);
            queue.emplace_back(next, -sign);
        }
        out.push_back({std::move(eta), sign});
    }
    return out;
}

}  // namespace affcone::detail
