#include "affcone/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace affcone {

namespace {

IntMat exact(const RatMat& m)
{
    IntMat out(m.size(), IntVec(m.empty() ? 0 : m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[i][j] = to_long_exact(m[i][j]);
    return out;
}

RatMat rat(const IntMat& m)
{
    RatMat out;
    for (const auto& row : m) out.push_back(to_rational(row));
    return out;
}

RatMat rat_mul(const RatMat& a, const RatMat& b)
{
    RatMat out(a.size(), RatVec(b[0].size(), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

long absl(long x) { return x < 0 ? -x : x; }

}  // namespace

bool RealRoot::positive() const
{
    if (n != 0) return n > 0;
    bool nonzero = false;
    for (long x : fin) {
        if (x < 0) return false;
        if (x > 0) nonzero = true;
    }
    return nonzero;
}

RealRoot RealRoot::operator-() const { return {scale(fin, -1), -n}; }

Parabolic Parabolic::maximal(int nodes, int i)
{
    Parabolic p{std::vector<bool>(nodes, true)};
    p.member[i] = false;
    return p;
}

bool Parabolic::subset_of(const Parabolic& q) const
{
    for (std::size_t j = 0; j < member.size(); ++j)
        if (member[j] && !q.member[j]) return false;
    return true;
}

WeylGroup::WeylGroup(std::shared_ptr<const AffineRootData> data) : data_(std::move(data))
{
    const auto& f = data_->finite();
    const int l = f.rank();
    root_to_labels_ = f.cartan();
    labels_to_roots_ = affcone::inverse(f.cartan());

    simple_.push_back(reflection(RealRoot{scale(data_->theta(), -1), 1}));
    for (int i = 0; i < l; ++i) {
        IntVec e(l, 0);
        e[i] = 1;
        simple_.push_back(reflection(RealRoot{e, 0}));
    }
}

WeylElement WeylGroup::identity() const
{
    const int l = data_->rank();
    const IntMat id = identity_matrix(l);
    return {IntVec(l, 0), id, id, id};
}

WeylElement WeylGroup::translation(const IntVec& h) const
{
    WeylElement w = identity();
    w.h = h;
    return w;
}

WeylElement WeylGroup::reflection(const RealRoot& beta) const
{
    const auto& f = data_->finite();
    const int l = f.rank();
    const IntVec co = f.coroot_of(beta.fin);
    WeylElement w;
    w.wl = f.reflection_on_labels(beta.fin);
    w.wc = f.reflection_on_coroots(beta.fin);
    // On root coordinates: a -> a - <a, beta^vee> beta.
    IntVec pair_row(l, 0);
    for (int c = 0; c < l; ++c)
        for (int k = 0; k < l; ++k) pair_row[c] += co[k] * root_to_labels_[k][c];
    w.wr = identity_matrix(l);
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < l; ++c) w.wr[r][c] -= beta.fin[r] * pair_row[c];
    w.h = scale(co, -beta.n);
    return w;
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const
{
    return {add(a.h, mat_vec(a.wc, b.h)), mat_mul(a.wl, b.wl), mat_mul(a.wc, b.wc), mat_mul(a.wr, b.wr)};
}

WeylElement WeylGroup::inverse(const WeylElement& a) const
{
    WeylElement w;
    w.wl = transpose(a.wc);
    w.wc = transpose(a.wl);
    w.wr = exact(rat_mul(rat_mul(labels_to_roots_, rat(w.wl)), rat(root_to_labels_)));
    w.h = scale(mat_vec(w.wc, a.h), -1);
    return w;
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const
{
    WeylElement w = identity();
    for (int i : word) {
        if (i < 0 || i >= num_nodes()) throw std::invalid_argument("simple index out of range");
        w = multiply(w, simple_[i]);
    }
    return w;
}

AffineCoweight WeylGroup::act(const WeylElement& w, const AffineCoweight& t) const
{
    const auto& f = data_->finite();
    const RatVec x = mat_vec(w.wc, t.dot);
    const RatVec h = to_rational(w.h);
    AffineCoweight out;
    out.dot = add(x, scale(h, t.d));
    out.d = t.d;
    out.c = t.c - f.coweight_form(x, h) - t.d * f.coweight_form(w.h, w.h) / 2;
    return out;
}

AffineWeight WeylGroup::act(const WeylElement& w, const AffineWeight& lam) const
{
    const auto& f = data_->finite();
    const RatVec x = mat_vec(w.wl, lam.dot);
    AffineWeight out;
    out.dot = add(x, scale(to_rational(f.nu(w.h)), lam.level));
    out.level = lam.level;
    out.delta = lam.delta - dot(w.h, x) - lam.level * f.coweight_form(w.h, w.h) / 2;
    return out;
}

RealRoot WeylGroup::act(const WeylElement& w, const RealRoot& beta) const
{
    RealRoot out;
    out.fin = mat_vec(w.wr, beta.fin);
    out.n = beta.n - dot(mat_vec(root_to_labels_, out.fin), w.h);
    return out;
}

long WeylGroup::length(const WeylElement& w) const
{
    const auto& f = data_->finite();
    const IntVec probe = mat_vec(w.wc, f.two_rho_check());
    long total = 0;
    for (const auto& lab : f.positive_root_labels()) {
        const long m = dot(lab, w.h);
        total += dot(lab, probe) > 0 ? absl(m) : absl(m - 1);
    }
    return total;
}

bool WeylGroup::is_right_descent(const WeylElement& w, int i) const
{
    return !act(w, simple_root(i)).positive();
}

bool WeylGroup::is_left_descent(const WeylElement& w, int i) const
{
    return !act(inverse(w), simple_root(i)).positive();
}

std::vector<int> WeylGroup::reduced_word(const WeylElement& w) const
{
    std::vector<int> word;
    WeylElement cur = w;
    while (true) {
        const WeylElement ci = inverse(cur);
        int found = -1;
        for (int i = 0; i < num_nodes() && found < 0; ++i)
            if (!act(ci, simple_root(i)).positive()) found = i;
        if (found < 0) break;
        word.push_back(found);
        cur = multiply(simple_[found], cur);
    }
    return word;
}

bool WeylGroup::bruhat_leq(const WeylElement& u, const WeylElement& v) const
{
    WeylElement a = u;
    WeylElement b = v;
    long la = length(a);
    long lb = length(b);
    while (true) {
        if (la > lb) return false;
        if (lb == 0) return la == 0;
        if (la == lb) return a == b;
        int s = -1;
        for (int i = 0; i < num_nodes() && s < 0; ++i)
            if (is_right_descent(b, i)) s = i;
        b = multiply(b, simple_[s]);
        --lb;
        if (is_right_descent(a, s)) {
            a = multiply(a, simple_[s]);
            --la;
        }
    }
}

bool WeylGroup::is_min_rep(const WeylElement& w, const Parabolic& p) const
{
    for (int j = 0; j < num_nodes(); ++j)
        if (p.contains(j) && is_right_descent(w, j)) return false;
    return true;
}

std::vector<WeylElement> WeylGroup::enumerate_min_reps(const Parabolic& p, int max_len) const
{
    std::vector<WeylElement> out{identity()};
    std::vector<WeylElement> layer{identity()};
    for (int len = 1; len <= max_len; ++len) {
        std::set<WeylElement> next;
        for (const auto& w : layer)
            for (int j = 0; j < num_nodes(); ++j) {
                if (is_left_descent(w, j)) continue;
                WeylElement x = multiply(simple_[j], w);
                if (is_min_rep(x, p)) next.insert(std::move(x));
            }
        layer.assign(next.begin(), next.end());
        std::vector<std::pair<std::vector<int>, std::size_t>> keys;
        for (std::size_t k = 0; k < layer.size(); ++k) keys.emplace_back(reduced_word(layer[k]), k);
        std::sort(keys.begin(), keys.end());
        std::vector<WeylElement> sorted;
        for (const auto& [word, k] : keys) sorted.push_back(layer[k]);
        layer = std::move(sorted);
        out.insert(out.end(), layer.begin(), layer.end());
        if (layer.empty()) break;
    }
    return out;
}

std::pair<WeylElement, WeylElement> WeylGroup::coset_factorize(const WeylElement& w, const Parabolic& p,
                                                               const Parabolic& q) const
{
    if (!p.subset_of(q)) throw std::invalid_argument("coset factorization needs P inside Q");
    if (!is_min_rep(w, p)) throw std::invalid_argument("element is not a minimal representative for P");
    WeylElement bar = w;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j < num_nodes(); ++j)
            if (q.contains(j) && is_right_descent(bar, j)) {
                bar = multiply(bar, simple_[j]);
                moved = true;
                break;
            }
    }
    WeylElement tilde = multiply(inverse(bar), w);
    if (length(bar) + length(tilde) != length(w))
        throw ConsistencyError("coset factorization is not length additive");
    return {bar, tilde};
}

std::vector<RealRoot> WeylGroup::inversion_set(const WeylElement& w) const
{
    const std::vector<int> word = reduced_word(w);
    std::vector<RealRoot> out;
    WeylElement suffix = identity();  // s_{i_k} ... s_{i_{j+1}}
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        out.push_back(-act(suffix, simple_root(*it)));
        suffix = multiply(suffix, simple_[*it]);
    }
    return out;
}

RealRoot WeylGroup::simple_root(int i) const
{
    const int l = data_->rank();
    if (i == 0) return {scale(data_->theta(), -1), 1};
    IntVec e(l, 0);
    e[i - 1] = 1;
    return {e, 0};
}

IntVec WeylGroup::affine_coords(const RealRoot& beta) const
{
    IntVec out{beta.n};
    for (int j = 0; j < data_->rank(); ++j) out.push_back(beta.fin[j] + beta.n * data_->theta()[j]);
    return out;
}

AffineWeight WeylGroup::as_weight(const RealRoot& beta) const
{
    return {to_rational(mat_vec(root_to_labels_, beta.fin)), 0, beta.n};
}

AffineCoweight WeylGroup::coroot(const RealRoot& beta) const
{
    const auto& f = data_->finite();
    return {to_rational(f.coroot_of(beta.fin)), Rational(2 * beta.n) / f.root_norm(beta.fin), 0};
}

std::string WeylGroup::encode(const WeylElement& w) const
{
    std::string s;
    for (int i : reduced_word(w)) {
        if (!s.empty()) s += ",";
        s += std::to_string(i);
    }
    return s;
}

WeylElement WeylGroup::decode(const std::string& text) const
{
    std::vector<int> word;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty() || item == "e") continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad reduced word '" + text + "'");
        }
        if (used != item.size()) throw std::invalid_argument("bad reduced word '" + text + "'");
        word.push_back(v);
    }
    return from_word(word);
}

bool WordOrder::operator()(const WeylElement& a, const WeylElement& b) const
{
    const long la = group->length(a);
    const long lb = group->length(b);
    if (la != lb) return la < lb;
    return group->reduced_word(a) < group->reduced_word(b);
}

}  // namespace affcone
