#include "affcone/repmult.hpp"

#include "weight_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace affcone {

namespace {

IntVec integral_labels(const AffineRootData& data, const AffineWeight& w, const char* what)
{
    if (!w.is_integral()) throw std::invalid_argument(std::string(what) + " is not integral: " + to_string(w));
    IntVec out;
    for (const Rational& a : data.affine_labels(w)) out.push_back(to_long_exact(a));
    return out;
}

IntVec dominant_labels(const AffineRootData& data, const AffineWeight& w, const char* what)
{
    IntVec out = integral_labels(data, w, what);
    if (std::any_of(out.begin(), out.end(), [](long a) { return a < 0; }))
        throw std::invalid_argument(std::string(what) + " is not dominant: " + to_string(w));
    return out;
}

/// Root coordinates of top - w when it lies in Q.
std::optional<IntVec> beta_between(const AffineRootData& data, const AffineWeight& top, const AffineWeight& w)
{
    auto c = data.root_coords(top - w);
    if (!c) return std::nullopt;
    IntVec out;
    for (const Rational& x : *c) {
        if (!is_integral(x)) return std::nullopt;
        out.push_back(to_long_exact(x));
    }
    return out;
}

AffineWeight below(const AffineRootData& data, const AffineWeight& top, const IntVec& beta)
{
    AffineWeight w = top;
    for (int i = 0; i < data.num_nodes(); ++i)
        if (beta[i]) w = w - data.simple_root(i) * Rational(beta[i]);
    return w;
}

bool nonnegative(const IntVec& v)
{
    return std::all_of(v.begin(), v.end(), [](long x) { return x >= 0; });
}

}  // namespace

WeightMultTable::WeightMultTable(std::shared_ptr<const AffineRootData> data, const AffineWeight& lambda, long depth)
    : data_(std::move(data)), lambda_(lambda), depth_(depth)
{
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    const IntVec labels = dominant_labels(*data_, lambda_, "highest weight");
    auto sys = std::make_shared<const detail::WeightSystem>(detail::affine_system(*data_, depth));
    table_ = std::make_shared<const detail::FreudenthalTable>(
        sys, labels, detail::affine_dominant_candidates(*data_, labels, depth), depth);
}

std::optional<Integer> WeightMultTable::multiplicity(const AffineWeight& mu) const
{
    auto beta = beta_between(*data_, lambda_, mu);
    if (!beta) return Integer(0);
    return multiplicity_below(*beta);
}

std::optional<Integer> WeightMultTable::multiplicity_below(const IntVec& beta) const
{
    return table_->multiplicity(beta);
}

std::vector<std::pair<AffineWeight, Integer>> WeightMultTable::dominant() const
{
    std::vector<std::pair<IntVec, Integer>> rows(table_->dominant().begin(), table_->dominant().end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        long ha = 0, hb = 0;
        for (long x : a.first) ha += x;
        for (long x : b.first) hb += x;
        return ha != hb ? ha < hb : a.first < b.first;
    });
    std::vector<std::pair<AffineWeight, Integer>> out;
    for (const auto& [beta, m] : rows) out.emplace_back(below(*data_, lambda_, beta), m);
    return out;
}

TensorMultiplier::TensorMultiplier(std::shared_ptr<const AffineRootData> data, long depth)
    : data_(std::move(data)), depth_(depth)
{
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
}

std::shared_ptr<const WeightMultTable> TensorMultiplier::weight_table(const AffineWeight& lambda, long depth) const
{
    IntVec key = integral_labels(*data_, lambda, "highest weight");
    key.push_back(to_long_exact(lambda.delta));
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = tables_.find(key);
        if (it != tables_.end() && it->second->depth() >= depth) return it->second;
    }
    auto table = std::make_shared<const WeightMultTable>(data_, lambda, depth);
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = tables_[key];
    if (!slot || slot->depth() < depth) slot = table;
    return slot;
}

TensorMultiplicity TensorMultiplier::klimyk(const AffineWeight& lambda1, const AffineWeight& lambda2,
                                            const AffineWeight& mu) const
{
    const AffineRootData& data = *data_;
    const FiniteRootData& fd = data.finite();
    TensorMultiplicity out;
    out.depth = depth_;

    const IntVec l1 = dominant_labels(data, lambda1, "lambda1");
    dominant_labels(data, lambda2, "lambda2");
    const IntVec lm = dominant_labels(data, mu, "mu");

    auto beta_mu = beta_between(data, lambda1 + lambda2, mu);
    if (!beta_mu || !nonnegative(*beta_mu)) {
        out.value = Integer(0);
        return out;
    }
    if (lambda1.level == 0 || lambda2.level == 0) {
        // One factor is one-dimensional.
        out.value = Integer(std::all_of(beta_mu->begin(), beta_mu->end(), [](long x) { return x == 0; }) ? 1 : 0);
        return out;
    }

    // Orbit points gamma = w(mu + rho) with delta-drop k give the weight
    // nu = gamma - rho - lambda2 of L(lambda1). Since |gamma_dot|^2 = P + 2Lk,
    // |nu|^2 <= |lambda1|^2 fails once Q(k) > 2a sqrt(P + 2Lk).
    const Rational ell1 = lambda1.level;
    const Rational big_l = lambda1.level + lambda2.level + data.dual_coxeter();
    const RatVec rho_dot(fd.rank(), Rational(1));
    const RatVec psi = add(mu.dot, rho_dot);
    const Rational p = fd.weight_form(psi, psi);
    const RatVec shift = add(rho_dot, lambda2.dot);
    const Rational a2 = fd.weight_form(shift, shift);
    const Rational c1 = fd.weight_form(lambda1.dot, lambda1.dot) + 2 * ell1 * (*beta_mu)[0];
    const Rational dd = big_l - ell1;
    const Rational q0 = p + a2 - c1;
    const Rational qa = 4 * dd * dd, qb = 4 * dd * q0 - 8 * a2 * big_l, qc = q0 * q0 - 4 * a2 * p;
    Integer start = ceil_of(-qb / (2 * qa));
    long k0 = std::max(0L, to_long(start));
    for (;; ++k0) {
        const Rational q = q0 + 2 * dd * k0;
        if (q > 0 && qa * k0 * k0 + qb * k0 + qc > 0) break;
    }
    out.orbit_bound = k0 - 1;

    IntVec psi_labels = lm;
    for (long& x : psi_labels) x += 1;
    const auto orbit = detail::descending_orbit(data.cartan(), psi_labels,
                                                [k0](const IntVec& eta) { return eta[0] >= k0; });
    out.orbit_points = orbit.size();

    const auto sys = std::make_shared<const detail::WeightSystem>(detail::affine_system(data, 0));
    std::vector<std::pair<IntVec, int>> terms;
    for (const auto& pt : orbit) {
        const IntVec beta = add(*beta_mu, pt.eta);
        auto dom = detail::dominant_beta(*sys, l1, beta);
        if (!dom) continue;
        if (detail::norm_gap(*sys, l1, *dom) < 0) continue;
        out.required_depth = std::max(out.required_depth, (*dom)[0]);
        terms.emplace_back(*dom, pt.sign);
    }
    if (out.required_depth > depth_) return out;

    auto table = weight_table(lambda1, depth_);
    Integer sum = 0;
    for (const auto& [beta, sign] : terms) {
        auto m = table->multiplicity_below(beta);
        if (!m) throw ConsistencyError("weight table shallower than its certified depth");
        sum += sign * *m;
    }
    if (sum < 0) throw ConsistencyError("negative tensor product multiplicity");
    out.value = sum;
    return out;
}

TensorMultiplicity TensorMultiplier::multiplicity(const AffineWeight& lambda1, const AffineWeight& lambda2,
                                                  const AffineWeight& mu) const
{
    TensorMultiplicity first = klimyk(lambda1, lambda2, mu);
    if (first.value) return first;
    TensorMultiplicity second = klimyk(lambda2, lambda1, mu);
    if (second.value) return second;
    return second.required_depth < first.required_depth ? second : first;
}

TensorMultTable TensorMultiplier::decompose(const AffineWeight& lambda1, const AffineWeight& lambda2) const
{
    TensorMultTable out{lambda1, lambda2, depth_, {}, {}};
    const AffineWeight top = lambda1 + lambda2;
    const IntVec labels = dominant_labels(*data_, top, "lambda1 + lambda2");
    for (const IntVec& beta : detail::affine_dominant_candidates(*data_, labels, depth_)) {
        const AffineWeight mu = below(*data_, top, beta);
        const TensorMultiplicity c = multiplicity(lambda1, lambda2, mu);
        if (!c.value) out.undecided.push_back(mu);
        else if (*c.value != 0) out.entries.emplace_back(mu, *c.value);
    }
    return out;
}

TensorMultiplicity tensor_multiplicity(std::shared_ptr<const AffineRootData> data, const AffineWeight& lambda1,
                                       const AffineWeight& lambda2, const AffineWeight& mu, long depth)
{
    return TensorMultiplier(std::move(data), depth).multiplicity(lambda1, lambda2, mu);
}

B0Report b0(const TensorMultiplier& engine, const AffineWeight& lambda1, const AffineWeight& lambda2,
            const AffineWeight& mubar, long window)
{
    const AffineRootData& data = engine.data();
    if (window < 0) throw std::invalid_argument("window must be nonnegative");
    if (lambda1.delta != 0 || lambda2.delta != 0)
        throw std::invalid_argument("b0 needs lambda1(d) = lambda2(d) = 0");
    if (lambda1.level <= 0 || lambda2.level <= 0) throw std::invalid_argument("b0 needs positive levels");
    if (mubar.level != lambda1.level + lambda2.level)
        throw std::invalid_argument("b0 needs mubar(c) = lambda1(c) + lambda2(c)");
    auto gamma = beta_between(data, lambda1 + lambda2, mubar);
    if (!gamma) throw std::invalid_argument("b0 needs mubar - lambda1 - lambda2 in Q");

    Rational top = Rational((*gamma)[0]) / data.marks()[0];
    for (int j = 1; j < data.num_nodes(); ++j) top = std::min(top, Rational(Rational((*gamma)[j]) / data.marks()[j]));

    B0Report r;
    r.window_top = to_long(floor_of(top));
    r.window_bottom = r.window_top - window;
    for (long b = r.window_top; b >= r.window_bottom; --b) {
        const TensorMultiplicity c = engine.multiplicity(lambda1, lambda2, mubar + data.delta() * Rational(b));
        if (!c.value) r.undecided.push_back(b);
        else if (*c.value > 0) r.support.push_back(b);
    }
    if (r.support.empty()) {
        r.shape = "none";
        return r;
    }
    r.b0 = r.support.front();
    if (!r.undecided.empty() && r.undecided.front() > *r.b0) {
        r.b0.reset();
        r.shape = "other";
        return r;
    }
    auto listed = [](const std::vector<long>& v, long b) { return std::find(v.begin(), v.end(), b) != v.end(); };
    long low = *r.b0;
    while (low - 1 >= r.window_bottom && !listed(r.undecided, low - 1)) --low;
    std::vector<long> interval, gap, seen;
    for (long b = *r.b0; b >= low; --b) {
        interval.push_back(b);
        if (b != *r.b0 - 1) gap.push_back(b);
        if (listed(r.support, b)) seen.push_back(b);
    }
    if (seen == interval) r.shape = "interval";
    else if (seen == gap) r.shape = "gap";
    else r.shape = "other";
    return r;
}

std::map<IntVec, Integer> finite_dominant_multiplicities(const FiniteRootData& fd, const IntVec& labels)
{
    if (!nonnegative(labels)) throw std::invalid_argument("highest weight is not dominant");
    auto sys = std::make_shared<const detail::WeightSystem>(detail::finite_system(fd));
    const detail::FreudenthalTable table(sys, labels, detail::finite_dominant_candidates(fd, labels), 0);
    std::map<IntVec, Integer> out;
    for (const auto& [beta, m] : table.dominant()) out[detail::shifted_labels(*sys, labels, beta)] = m;
    return out;
}

Integer finite_tensor_multiplicity(const FiniteRootData& fd, const IntVec& lambda1, const IntVec& lambda2,
                                   const IntVec& mu)
{
    if (!nonnegative(lambda1) || !nonnegative(lambda2) || !nonnegative(mu))
        throw std::invalid_argument("finite tensor multiplicity needs dominant weights");
    auto beta_mu = fd.root_lattice_coords(sub(add(lambda1, lambda2), mu));
    if (!beta_mu || !nonnegative(*beta_mu)) return 0;

    auto sys = std::make_shared<const detail::WeightSystem>(detail::finite_system(fd));
    const detail::FreudenthalTable table(sys, lambda1, detail::finite_dominant_candidates(fd, lambda1), 0);
    IntVec psi = mu;
    for (long& x : psi) x += 1;
    Integer sum = 0;
    for (const auto& pt : detail::descending_orbit(fd.cartan(), psi, [](const IntVec&) { return false; }))
        sum += pt.sign * *table.multiplicity(add(*beta_mu, pt.eta));
    if (sum < 0) throw ConsistencyError("negative tensor product multiplicity");
    return sum;
}

IntMat levi_cartan(const AffineRootData& data, int i)
{
    IntMat out;
    for (int r = 0; r < data.num_nodes(); ++r) {
        if (r == i) continue;
        IntVec row;
        for (int c = 0; c < data.num_nodes(); ++c)
            if (c != i) row.push_back(data.cartan()[r][c]);
        out.push_back(row);
    }
    return out;
}

Integer levi_multiplicity(const AffineRootData& data, int i, const AffineWeight& lambda1,
                          const AffineWeight& lambda2, const AffineWeight& mu)
{
    if (i < 0 || i >= data.num_nodes()) throw std::invalid_argument("node index out of range");
    auto restrict = [&](const AffineWeight& w, const char* what) {
        IntVec all = integral_labels(data, w, what);
        IntVec out;
        for (int j = 0; j < data.num_nodes(); ++j)
            if (j != i) out.push_back(all[j]);
        if (!nonnegative(out)) throw std::invalid_argument(std::string(what) + " is not dominant for the Levi");
        return out;
    };
    const IntVec a = restrict(lambda1, "lambda1"), b = restrict(lambda2, "lambda2"), m = restrict(mu, "mu");
    auto gamma = beta_between(data, lambda1 + lambda2, mu);
    if (!gamma || (*gamma)[i] != 0) return 0;
    const FiniteRootData levi = FiniteRootData::from_cartan(levi_cartan(data, i), "levi");
    return finite_tensor_multiplicity(levi, a, b, m);
}

Rational pairing_with_moved_coweight(const WeylGroup& group, const AffineWeight& lambda, const WeylElement& w, int i)
{
    return group.data().pair(lambda, group.act(w, group.data().fundamental_coweight(i)));
}

BoundaryReport boundary_reduction_check(const SchubertTable& table, const TensorMultiplier& engine,
                                        std::size_t u1, std::size_t u2, std::size_t v, int i,
                                        const AffineWeight& lambda1, const AffineWeight& lambda2,
                                        const AffineWeight& mu)
{
    const WeylGroup& g = table.group();
    const Parabolic p = Parabolic::maximal(g.num_nodes(), i);
    const WeylElement &x1 = table.element(u1), &x2 = table.element(u2), &y = table.element(v);
    for (const WeylElement* w : {&x1, &x2, &y})
        if (!g.is_min_rep(*w, p)) throw std::invalid_argument("boundary check needs elements of W^P");
    BoundaryReport r;
    r.ordinary_coefficient = table.structure_constant(u1, u2, v, p);
    if (r.ordinary_coefficient != 1) throw std::invalid_argument("boundary check needs n_{u1 u2}^v = 1");
    if (pairing_with_moved_coweight(g, mu, y, i) !=
        pairing_with_moved_coweight(g, lambda1, x1, i) + pairing_with_moved_coweight(g, lambda2, x2, i))
        throw std::invalid_argument("boundary check needs the inequality to be an equality");

    r.lambda1_bar = g.act(g.inverse(x1), lambda1);
    r.lambda2_bar = g.act(g.inverse(x2), lambda2);
    r.mu_bar = g.act(g.inverse(y), mu);
    r.affine = engine.multiplicity(lambda1, lambda2, mu);
    r.levi = levi_multiplicity(g.data(), i, r.lambda1_bar, r.lambda2_bar, r.mu_bar);
    if (r.affine.value) r.equal = (*r.affine.value == r.levi);
    return r;
}

}  // namespace affcone
