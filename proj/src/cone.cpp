#include "affcone/cone.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>

namespace affcone {

std::vector<InequalityIndex> enumerate_inequalities(const SchubertTable& table, int max_len)
{
    if (max_len > table.max_len()) throw std::invalid_argument("max_len exceeds the Schubert table");
    const WeylGroup& g = table.group();
    const AffineRootData& data = g.data();
    const int nodes = g.num_nodes();

    std::vector<InequalityIndex> out;
    for (int i = 0; i < nodes; ++i) {
        const Parabolic p = Parabolic::maximal(nodes, i);
        const AffineCoweight w_i = data.fundamental_coweight(i);
        std::vector<std::size_t> reps;
        for (const WeylElement& w : g.enumerate_min_reps(p, max_len)) reps.push_back(table.index(w));

        std::vector<InequalityIndex> block;
        for (std::size_t a : reps)
            for (std::size_t b : reps) {
                if (table.length(a) + table.length(b) > max_len) continue;
                for (const auto& [v, n] : table.product(a, b, p)) {
                    if (n != 1) continue;
                    if (delta_shift(g, table.element(a), table.element(b), table.element(v), i) != 0) continue;
                    InequalityIndex idx;
                    idx.node = i;
                    idx.u1 = a;
                    idx.u2 = b;
                    idx.v = v;
                    idx.e1 = table.element(a);
                    idx.e2 = table.element(b);
                    idx.ev = table.element(v);
                    idx.w1 = table.word(a);
                    idx.w2 = table.word(b);
                    idx.wv = table.word(v);
                    idx.h1 = idx.e1.h;
                    idx.h2 = idx.e2.h;
                    idx.h = idx.ev.h;
                    idx.t1 = g.act(idx.e1, w_i);
                    idx.t2 = g.act(idx.e2, w_i);
                    idx.tv = g.act(idx.ev, w_i);
                    block.push_back(std::move(idx));
                }
            }
        std::sort(block.begin(), block.end(), [](const InequalityIndex& x, const InequalityIndex& y) {
            return std::forward_as_tuple(x.wv.size(), x.wv, x.w1, x.w2) <
                   std::forward_as_tuple(y.wv.size(), y.wv, y.w1, y.w2);
        });
        for (auto& idx : block) out.push_back(std::move(idx));
    }
    return out;
}

void require_in_domain(const AffineRootData& data, const ConePoint& x)
{
    const std::size_t l = static_cast<std::size_t>(data.rank());
    for (const AffineWeight* w : {&x.lambda1, &x.lambda2, &x.mubar})
        if (w->dot.size() != l) throw std::invalid_argument("weight has the wrong rank");
    if (x.lambda1.level <= 0 || x.lambda2.level <= 0)
        throw std::invalid_argument("lambda1 and lambda2 must have positive level");
    if (x.lambda1.delta != 0 || x.lambda2.delta != 0)
        throw std::invalid_argument("lambda1 and lambda2 must have zero delta coefficient");
    if (x.mubar.level != x.lambda1.level + x.lambda2.level)
        throw std::invalid_argument("level of mu must be the sum of the levels");
    if (!data.is_dominant(x.lambda1) || !data.is_dominant(x.lambda2) || !data.is_dominant(x.mubar))
        throw std::invalid_argument("weights must be dominant");
}

Rational phi_index(const AffineRootData& data, const InequalityIndex& idx, const ConePoint& x)
{
    require_in_domain(data, x);
    AffineWeight mubar = x.mubar;
    mubar.delta = 0;
    const Rational depth = data.fundamental_coweight(idx.node).d;
    return (data.pair(x.lambda1, idx.t1) + data.pair(x.lambda2, idx.t2) - data.pair(mubar, idx.tv)) / depth;
}

namespace {

/// Finite part wdot of w = t_h wdot, as an element of W.
WeylElement finite_part(const WeylElement& w)
{
    WeylElement f = w;
    std::fill(f.h.begin(), f.h.end(), 0);
    return f;
}

}  // namespace

Rational phi_index_by_formula(const WeylGroup& group, const InequalityIndex& idx, const ConePoint& x)
{
    const AffineRootData& data = group.data();
    const FiniteRootData& fd = data.finite();
    require_in_domain(data, x);
    const Rational l1 = x.lambda1.level, l2 = x.lambda2.level;
    const RatVec &a1 = x.lambda1.dot, &a2 = x.lambda2.dot, &m = x.mubar.dot;
    auto norm2 = [&](const RatVec& h) -> Rational { return fd.coweight_form(h, h); };

    if (idx.node == 0) {
        const RatVec h1 = to_rational(idx.h1), h2 = to_rational(idx.h2), h = to_rational(idx.h);
        return dot(h1, a1) + dot(h2, a2) - dot(h, m) + l1 / 2 * (norm2(h) - norm2(h1)) +
               l2 / 2 * (norm2(h) - norm2(h2));
    }

    // Here w = wdot t_{h'} with h' = wdot^{-1} h.
    const int j = idx.node - 1;
    const RatVec wd = fd.fundamental_coweight(j);
    const Rational depth = data.theta()[j];
    struct Part {
        WeylElement wdot;
        RatVec hp;
    };
    auto split = [&](const WeylElement& w) {
        Part p{finite_part(w), {}};
        p.hp = mat_vec(group.inverse(p.wdot).wc, to_rational(w.h));
        return p;
    };
    const Part p1 = split(idx.e1), p2 = split(idx.e2), pv = split(idx.ev);
    auto moved = [&](const Part& p) -> RatVec { return mat_vec(p.wdot.wc, add(p.hp, scale(wd, 1 / depth))); };
    auto bracket = [&](const Part& pk) -> Rational {
        return norm2(pv.hp) - norm2(pk.hp) + 2 * fd.coweight_form(wd, sub(pv.hp, pk.hp)) / depth;
    };
    return dot(moved(p1), a1) + dot(moved(p2), a2) - dot(moved(pv), m) + l1 / 2 * bracket(p1) +
           l2 / 2 * bracket(p2);
}

LengthNormConstants lvsnorm_constants(const AffineRootData& data)
{
    // The norm sum_{alpha > 0} |<h, alpha>| over |h| is quasi-concave on the
    // dominant chamber, so its minimum sits on a fundamental coweight ray.
    const FiniteRootData& fd = data.finite();
    LengthNormConstants out;
    out.n = static_cast<long>(fd.num_positive_roots());
    bool first = true;
    for (int j = 0; j < fd.rank(); ++j) {
        long s = 0;
        for (const IntVec& r : fd.positive_roots()) s += r[j];
        const RatVec w = fd.fundamental_coweight(j);
        const Rational k2 = Rational(s * s) / fd.coweight_form(w, w);
        if (first || k2 < out.k_squared) out.k_squared = k2;
        first = false;
    }
    return out;
}

PhiLowerBound phi_lower_bound(const AffineRootData& data, const ConePoint& x)
{
    require_in_domain(data, x);
    const FiniteRootData& fd = data.finite();
    const LengthNormConstants kn = lvsnorm_constants(data);

    auto norm_up = [&](const RatVec& w) -> Rational { return sqrt_upper(fd.weight_form(w, w)); };
    const Rational n1 = norm_up(x.lambda1.dot), n2 = norm_up(x.lambda2.dot), nm = norm_up(x.mubar.dot);
    const Rational rho = norm_up(to_rational(fd.rho_labels()));
    const Rational hv = data.dual_coxeter();
    Rational c = 0;
    for (int j = 0; j < fd.rank(); ++j) {
        const RatVec w = fd.fundamental_coweight(j);
        const Rational t = data.theta()[j];
        c = std::max(c, Rational(sqrt_upper(fd.coweight_form(w, w) / (t * t))));
    }
    const Rational ell = std::min(x.lambda1.level, x.lambda2.level);
    const Rational half = ell / 2;

    // max(|h1|, |h2|) <= s = a + b |h|.
    const Rational inv_k = 1 / sqrt_lower(kn.k_squared);
    const Rational a = 2 * kn.n * inv_k;
    const Rational b = kn.n * sqrt_upper(Rational(2)) * inv_k;

    // Lower bound for |h|^2 - |h1|^2 - |h2|^2 from the nonnegative delta shift:
    // X >= -6 |rho| C / h - (2 |rho| / h + 2 C)(|h| + 2 s).
    const Rational xr = 2 * rho / hv + 2 * c;

    PhiLowerBound lb;
    lb.quad = half;
    lb.lin = b * (n1 + n2) + nm + half * xr * (1 + 2 * b) + half * 4 * c * (1 + b);
    lb.cst = a * (n1 + n2) + c * (n1 + n2 + nm) + half * (6 * rho * c / hv + xr * 2 * a) + half * 4 * c * a;
    return lb;
}

long certified_length_cap(const AffineRootData& data, const ConePoint& x, const Rational& m)
{
    const PhiLowerBound lb = phi_lower_bound(data, x);
    const long n = lvsnorm_constants(data).n;
    // quad r^2 - lin r - (cst + m) > 0 beyond the larger root.
    const Rational disc = lb.lin * lb.lin + 4 * lb.quad * (lb.cst + m);
    Rational r0 = 0;
    if (disc >= 0) r0 = std::max(Rational(0), Rational((lb.lin + sqrt_upper(disc)) / (2 * lb.quad)));
    return to_long(floor_of(n + sqrt_upper(2 * n * n * r0 * r0)));
}

TableTooSmall::TableTooSmall(long needed, long available)
    : std::runtime_error("table too small: need max_len >= " + std::to_string(needed) + " (have " +
                         std::to_string(available) + ")"),
      needed_(needed),
      available_(available)
{
}

std::string to_string(MembershipReport::Verdict v)
{
    switch (v) {
    case MembershipReport::Verdict::Member:
        return "member";
    case MembershipReport::Verdict::Boundary:
        return "boundary";
    case MembershipReport::Verdict::NotMember:
        return "not_member";
    }
    return "?";
}

ConeSolver::ConeSolver(std::shared_ptr<const WeylGroup> group, int max_len)
    : group_(std::move(group)),
      max_len_(max_len),
      table_(std::make_shared<SchubertTable>(group_, max_len, SolveMode::Evaluated)),
      list_(enumerate_inequalities(*table_, max_len))
{
}

PhiResult ConeSolver::phi(const ConePoint& x) const
{
    const AffineRootData& data = group_->data();
    require_in_domain(data, x);
    std::vector<Rational> values(list_.size());
    for (std::size_t k = 0; k < list_.size(); ++k) values[k] = phi_index(data, list_[k], x);
    PhiResult out;
    out.value = *std::min_element(values.begin(), values.end());
    out.cap = certified_length_cap(data, x, out.value);
    if (out.cap > max_len_) throw TableTooSmall(out.cap, max_len_);
    for (std::size_t k = 0; k < list_.size(); ++k)
        if (values[k] == out.value) out.attaining.push_back(k);
    return out;
}

MembershipReport ConeSolver::is_member(const AffineWeight& lambda1, const AffineWeight& lambda2,
                                       const AffineWeight& mu) const
{
    const AffineRootData& data = group_->data();
    if (lambda1.level <= 0 || lambda2.level <= 0)
        throw std::invalid_argument("membership is only described for positive levels of lambda1 and lambda2");

    MembershipReport rep;
    rep.b = mu.delta - lambda1.delta - lambda2.delta;
    ConePoint x{lambda1, lambda2, mu};
    x.lambda1.delta = 0;
    x.lambda2.delta = 0;
    x.mubar.delta = 0;
    if (!data.is_dominant(lambda1) || !data.is_dominant(lambda2) || !data.is_dominant(mu)) {
        rep.reason = "not dominant";
        return rep;
    }
    if (mu.level != lambda1.level + lambda2.level) {
        rep.reason = "level of mu differs from the sum of the levels";
        return rep;
    }

    const PhiResult p = phi(x);
    rep.phi = p.value;
    rep.cap = p.cap;
    if (rep.b < p.value) {
        rep.verdict = MembershipReport::Verdict::Member;
        rep.reason = "b < phi";
    } else if (rep.b == p.value) {
        rep.verdict = MembershipReport::Verdict::Boundary;
        rep.reason = "b = phi";
        rep.indices = p.attaining;
    } else {
        rep.reason = "b > phi";
        for (std::size_t k = 0; k < list_.size(); ++k)
            if (phi_index(data, list_[k], x) < rep.b) rep.indices.push_back(k);
    }
    return rep;
}

std::vector<MembershipReport> ConeSolver::is_member_batch(const std::vector<std::array<AffineWeight, 3>>& triples,
                                                          int jobs) const
{
    std::vector<MembershipReport> out(triples.size());
    std::vector<std::exception_ptr> errors(triples.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k; (k = next++) < triples.size();) {
            try {
                out[k] = is_member(triples[k][0], triples[k][1], triples[k][2]);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

SaturationReport ConeSolver::saturation_check(const TensorMultiplier& engine, const AffineWeight& lambda1,
                                              const AffineWeight& lambda2, const AffineWeight& mu, long d,
                                              SaturationMode mode) const
{
    const AffineRootData& data = group_->data();
    if (d < 2) throw std::invalid_argument("saturation needs d >= 2");
    for (const AffineWeight* w : {&lambda1, &lambda2, &mu})
        if (!w->is_integral() || !data.is_dominant(*w))
            throw std::invalid_argument("saturation needs integral dominant weights");
    if (!in_root_lattice(data, mu - lambda1 - lambda2))
        throw std::invalid_argument("mu - lambda1 - lambda2 must lie in the root lattice");
    if (is_member(lambda1, lambda2, mu).verdict == MembershipReport::Verdict::NotMember)
        throw std::invalid_argument("triple is not in the cone");

    const long kg = k_g_dot(data), ks = k_s(data);
    SaturationReport rep;
    rep.mode = mode;
    rep.d = d;
    rep.factor = (mode == SaturationMode::Stretch && ks == 1) ? d * kg : kg * ks;
    rep.lambda1 = lambda1 * rep.factor;
    rep.lambda2 = lambda2 * rep.factor;
    rep.mu = mu * rep.factor;
    if (mode == SaturationMode::DeltaShift) rep.mu = rep.mu - data.delta() * d;
    rep.multiplicity = engine.multiplicity(rep.lambda1, rep.lambda2, rep.mu);
    if (rep.multiplicity.value) rep.confirmed = *rep.multiplicity.value > 0;
    return rep;
}

}  // namespace affcone
