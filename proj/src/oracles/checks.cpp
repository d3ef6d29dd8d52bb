#include "affcone/oracles/checks.hpp"

#include "affcone/oracles/characters.hpp"
#include "affcone/oracles/weyl_ball.hpp"

#include <functional>
#include <random>

namespace affcone::oracle {

void CheckResult::expect(bool ok, const std::string& what)
{
    ++comparisons;
    if (ok) return;
    if (failures == 0) first_failure = what;
    ++failures;
}

namespace {

IntMat coweight_matrix(const WeylGroup& g, const WeylElement& w)
{
    const int l = g.data().rank();
    IntMat m(l + 2, IntVec(l + 2, 0));
    for (int j = 0; j < l + 2; ++j) {
        AffineCoweight t = g.data().zero_coweight();
        if (j < l) t.dot[j] = 1;
        else if (j == l) t.c = 1;
        else t.d = 1;
        const AffineCoweight r = g.act(w, t);
        for (int i = 0; i < l; ++i) m[i][j] = to_long_exact(r.dot[i]);
        m[l][j] = to_long_exact(r.c);
        m[l + 1][j] = to_long_exact(r.d);
    }
    return m;
}

std::string word_text(const std::vector<int>& w)
{
    std::string s = "[";
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
    return s + "]";
}

std::vector<IntVec> dominant_of_level(const AffineRootData& d, long level)
{
    std::vector<IntVec> out;
    IntVec cur(d.num_nodes(), 0);
    std::function<void(int, long)> rec = [&](int j, long left) {
        if (j == d.num_nodes()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (long a = 0; a * d.comarks()[j] <= left; ++a) {
            cur[j] = a;
            rec(j + 1, left - a * d.comarks()[j]);
        }
        cur[j] = 0;
    };
    rec(0, level);
    return out;
}

AffineWeight from_labels(const AffineRootData& d, const IntVec& labels, long delta = 0)
{
    return d.from_affine_labels(to_rational(labels), Rational(delta));
}

std::string labels_text(const IntVec& v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

}  // namespace

CheckResult check_length_formula(std::shared_ptr<const AffineRootData> data, int radius)
{
    CheckResult r{"length formula vs word-length ball, " + data->type().affine_label()};
    WeylGroup g(data);
    for (const auto& b : weyl_ball(*data, radius)) {
        const WeylElement w = g.from_word(b.word);
        r.expect(g.length(w) == b.length, "length of " + word_text(b.word));
        r.expect(coweight_matrix(g, w) == b.matrix, "matrix of " + word_text(b.word));
    }
    return r;
}

CheckResult check_length_sandwich(std::shared_ptr<const AffineRootData> data, int radius)
{
    CheckResult r{"length/norm sandwich, " + data->type().affine_label()};
    WeylGroup g(data);
    const auto kn = lvsnorm_constants(*data);
    const long n = kn.n;
    for (const auto& b : weyl_ball(*data, radius)) {
        const WeylElement w = g.from_word(b.word);
        const Rational h2 = data->finite().coweight_form(w.h, w.h);
        const long l = b.length;
        r.expect(kn.k_squared * h2 <= Rational((l + n) * (l + n)), "lower bound at " + word_text(b.word));
        r.expect(l - n <= 0 || Rational((l - n) * (l - n)) <= 2 * n * n * h2, "upper bound at " + word_text(b.word));
    }
    return r;
}

CheckResult check_structure_constants(std::shared_ptr<const WeylGroup> group, int max_len)
{
    const WeylGroup& g = *group;
    CheckResult r{"structure constants, " + g.data().type().affine_label()};
    SchubertTable poly(group, max_len);
    SchubertTable t(group, max_len, SolveMode::Evaluated);
    const auto borel = Parabolic::borel(g.num_nodes());
    for (int i = 0; i < g.num_nodes(); ++i) {
        const auto si = poly.index(g.simple(i));
        for (std::size_t u = 0; u < poly.size(); ++u) {
            if (poly.length(u) + 1 > max_len) continue;
            r.expect(poly.chevalley(i, u) == poly.product(si, u, borel), "Chevalley rule at s" + std::to_string(i) +
                                                                              " * " + word_text(poly.word(u)));
        }
    }
    const std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (t.length(a) + t.length(b) > max_len) continue;
            const auto ab = t.product(a, b, borel);
            const std::string at = word_text(t.word(a)) + " * " + word_text(t.word(b));
            r.expect(ab == t.product(b, a, borel), "commutativity at " + at);
            for (const auto& [v, c] : ab) r.expect(c > 0, "positivity at " + at);
            for (std::size_t c = 0; c < n; ++c) {
                if (t.length(a) + t.length(b) + t.length(c) > max_len) continue;
                std::map<std::size_t, Integer> left, right;
                for (const auto& [z, x] : ab)
                    for (const auto& [v, y] : t.product(z, c, borel)) left[v] += x * y;
                for (const auto& [z, x] : t.product(b, c, borel))
                    for (const auto& [v, y] : t.product(a, z, borel)) right[v] += x * y;
                r.expect(left == right, "associativity at " + at + " * " + word_text(t.word(c)));
            }
        }
    return r;
}

CheckResult check_delta_shift(std::shared_ptr<const WeylGroup> group, int max_len)
{
    const WeylGroup& h = *group;
    CheckResult r{"delta shift sign and profile additivity, " + h.data().type().affine_label()};
    SchubertTable tab(group, max_len, SolveMode::Evaluated);
    const int n = h.num_nodes();
    for (int i = 0; i < n; ++i) {
        const auto p = Parabolic::maximal(n, i);
        std::vector<std::size_t> reps;
        for (std::size_t k = 0; k < tab.size(); ++k)
            if (h.is_min_rep(tab.element(k), p)) reps.push_back(k);
        for (auto a : reps)
            for (auto b : reps) {
                if (tab.length(a) + tab.length(b) > max_len) continue;
                for (auto v : reps) {
                    if (tab.length(v) != tab.length(a) + tab.length(b)) continue;
                    const std::string at = word_text(tab.word(a)) + "," + word_text(tab.word(b)) + "," +
                                           word_text(tab.word(v)) + " at node " + std::to_string(i);
                    const auto &ua = tab.element(a), &ub = tab.element(b), &uv = tab.element(v);
                    const long d = delta_shift(h, ua, ub, uv, i);
                    r.expect(d == delta_shift_by_inversions(h, ua, ub, uv, i), "inversion-set shift " + at);
                    const Integer c = tab.structure_constant(a, b, v, p);
                    if (c != 0) r.expect(d >= 0, "negative shift " + at);
                    if (bkb_coefficient(tab, a, b, v, i) != 0) {
                        auto pa = levi_weight_profile(h, ua, i);
                        for (const auto& [key, cnt] : levi_weight_profile(h, ub, i)) pa[key] += cnt;
                        r.expect(pa == levi_weight_profile(h, uv, i), "profile additivity " + at);
                    }
                }
            }
    }
    return r;
}

CheckResult check_multiplicativity(std::shared_ptr<const WeylGroup> group, int max_len)
{
    const WeylGroup& g = *group;
    CheckResult r{"multiplicativity, " + g.data().type().affine_label()};
    SchubertTable t(group, max_len);
    const int nodes = g.num_nodes();
    const auto borel = Parabolic::borel(nodes);
    for (int qi = 0; qi < nodes; ++qi) {
        const auto q = Parabolic::maximal(nodes, qi);
        for (std::size_t a = 0; a < t.size(); ++a)
            for (std::size_t b = 0; b < t.size(); ++b)
                for (std::size_t v = 0; v < t.size(); ++v) {
                    if (t.length(v) != t.length(a) + t.length(b)) continue;
                    const auto ab = g.coset_factorize(t.element(a), borel, q).first;
                    const auto bb = g.coset_factorize(t.element(b), borel, q).first;
                    const auto vb = g.coset_factorize(t.element(v), borel, q).first;
                    if (g.length(vb) != g.length(ab) + g.length(bb)) continue;
                    const auto rep = check_multiplicativity(t, a, b, v, borel, q);
                    r.expect(rep.holds, word_text(t.word(a)) + "," + word_text(t.word(b)) + "," +
                                            word_text(t.word(v)) + " in P" + std::to_string(qi));
                }
    }
    return r;
}

CheckResult check_weight_multiplicities(std::shared_ptr<const AffineRootData> data, long max_level, long depth)
{
    const AffineRootData& d = *data;
    CheckResult r{"Freudenthal vs Weyl-Kac, " + d.type().affine_label()};
    for (long level = 0; level <= max_level; ++level)
        for (const IntVec& labels : dominant_of_level(d, level)) {
            const AffineWeight lam = from_labels(d, labels);
            WeightMultTable t(data, lam, depth);
            const auto ch = affine_character(d, lam, depth);
            for (std::size_t k = 0; k < ch.size(); ++k) {
                const auto m = t.multiplicity_below(ch.point(k));
                r.expect(m && *m == ch[k], "weight " + labels_text(ch.point(k)) + " below " + labels_text(labels));
            }
        }
    return r;
}

CheckResult check_tensor_multiplicities(std::shared_ptr<const AffineRootData> data, long max_level, long depth)
{
    const AffineRootData& d = *data;
    CheckResult r{"Klimyk vs character peeling, " + d.type().affine_label()};
    const TensorMultiplier engine(data, depth + 8);
    for (long a = 1; a <= max_level; ++a)
        for (long b = 1; b <= max_level; ++b)
            for (const IntVec& x : dominant_of_level(d, a))
                for (const IntVec& y : dominant_of_level(d, b)) {
                    const AffineWeight l1 = from_labels(d, x), l2 = from_labels(d, y);
                    const auto peeled = affine_tensor_by_peeling(d, l1, l2, depth);
                    for (const IntVec& z : dominant_of_level(d, a + b))
                        for (long k = 0; k <= depth; ++k) {
                            const AffineWeight mu = from_labels(d, z, -k);
                            const auto beta = d.root_coords(l1 + l2 - mu);
                            Integer expected = 0;
                            IntVec key;
                            bool integral = true;
                            for (const Rational& q : *beta) {
                                if (!is_integral(q)) integral = false;
                                else key.push_back(to_long_exact(q));
                            }
                            if (integral && peeled.count(key)) expected = peeled.at(key);
                            const TensorMultiplicity m = engine.multiplicity(l1, l2, mu);
                            r.expect(m.value && *m.value == expected, "c at " + labels_text(x) + " x " +
                                                                          labels_text(y) + " -> " + labels_text(z) +
                                                                          " - " + std::to_string(k) + " delta");
                        }
                }
    return r;
}

CheckResult check_phi_formula(std::shared_ptr<const WeylGroup> group, int max_len, unsigned seed)
{
    const WeylGroup& g = *group;
    const AffineRootData& d = g.data();
    CheckResult r{"phi by pairing vs closed formula, " + d.type().affine_label()};
    SchubertTable table(group, max_len, SolveMode::Evaluated);
    const auto list = enumerate_inequalities(table, max_len);
    std::mt19937 rng(seed);
    auto random_labels = [&] {
        IntVec lab(d.num_nodes());
        for (auto& x : lab) x = std::uniform_int_distribution<long>(0, 3)(rng);
        lab[0] += 1;
        return lab;
    };
    for (int trial = 0; trial < 6; ++trial) {
        const AffineWeight l1 = from_labels(d, random_labels()), l2 = from_labels(d, random_labels());
        RatVec lab = d.affine_labels(from_labels(d, random_labels()));
        lab[0] = 0;
        AffineWeight mu = d.from_affine_labels(lab, 0);
        lab[0] = l1.level + l2.level - mu.level;
        if (lab[0] < 0) continue;
        mu = d.from_affine_labels(lab, 0);
        const ConePoint x{l1, l2, mu};
        for (const auto& a : list)
            r.expect(phi_index(d, a, x) == phi_index_by_formula(g, a, x),
                     "index " + word_text(a.w1) + "," + word_text(a.w2) + "," + word_text(a.wv) + " node " +
                         std::to_string(a.node));
    }
    return r;
}

}  // namespace affcone::oracle
