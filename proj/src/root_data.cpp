#include "affcone/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace affcone {

namespace {

bool valid_rank(char family, int rank)
{
    switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
    }
}

IntMat cartan_of(const CartanType& t)
{
    const int l = t.rank;
    IntMat a(l, IntVec(l, 0));
    for (int i = 0; i < l; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (t.family) {
    case 'A':
        for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
        break;
    case 'B':
        for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
        a[l - 1][l - 2] = -2;
        break;
    case 'C':
        for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
        a[l - 2][l - 1] = -2;
        break;
    case 'D':
        for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
        link(l - 3, l - 1);
        break;
    case 'E':
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < l; ++i) link(i, i + 1);
        break;
    case 'F':
        link(0, 1);
        link(1, 2);
        link(2, 3);
        a[2][1] = -2;
        break;
    case 'G':
        a[0][1] = -3;
        a[1][0] = -1;
        break;
    }
    return a;
}

}  // namespace

CartanType CartanType::parse(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '_') s.push_back(ch);
    if (!s.empty() && s.back() == '~') s.pop_back();
    if (s.size() < 2) throw std::invalid_argument("unknown Cartan type '" + std::string(text) + "'");
    CartanType t;
    t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    const std::string digits = s.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        digits.size() > 3)
        throw std::invalid_argument("unknown Cartan type '" + std::string(text) + "'");
    t.rank = std::stoi(digits);
    if (!valid_rank(t.family, t.rank))
        throw std::invalid_argument("unknown Cartan type '" + std::string(text) + "'");
    return t;
}

std::string CartanType::label() const { return std::string(1, family) + std::to_string(rank); }
std::string CartanType::affine_label() const { return label() + "~"; }

FiniteRootData FiniteRootData::from_type(const CartanType& type)
{
    if (!valid_rank(type.family, type.rank))
        throw std::invalid_argument("unknown Cartan type " + type.label());
    return from_cartan(cartan_of(type), type.label());
}

FiniteRootData FiniteRootData::from_cartan(const IntMat& cartan, std::string label)
{
    FiniteRootData r;
    r.label_ = std::move(label);
    r.cartan_ = cartan;
    const int l = r.rank();
    for (int i = 0; i < l; ++i) {
        if (static_cast<int>(cartan[i].size()) != l) throw std::invalid_argument("Cartan matrix is not square");
        if (cartan[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
        for (int j = 0; j < l; ++j)
            if (i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)))
                throw std::invalid_argument("not a generalized Cartan matrix");
    }

    // Symmetrizer: a_ij n_i = a_ji n_j, propagated along each component,
    // then rescaled so the longest root of the component has norm 2.
    r.norms_.assign(l, Rational(0));
    int components = 0;
    for (int s = 0; s < l; ++s) {
        if (r.norms_[s] != 0) continue;
        ++components;
        std::vector<int> comp{s};
        r.norms_[s] = 1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < l; ++j) {
                if (j == i || cartan[i][j] == 0) continue;
                Rational nj = r.norms_[i] * Rational(cartan[i][j]) / Rational(cartan[j][i]);
                if (r.norms_[j] == 0) {
                    r.norms_[j] = nj;
                    comp.push_back(j);
                    queue.push_back(j);
                } else if (r.norms_[j] != nj) {
                    throw std::invalid_argument("Cartan matrix is not symmetrizable");
                }
            }
        }
        Rational mx = 0;
        for (int i : comp) mx = std::max(mx, r.norms_[i]);
        for (int i : comp) r.norms_[i] = r.norms_[i] * 2 / mx;
    }
    r.irreducible_ = components <= 1;

    r.root_gram_.assign(l, RatVec(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) r.root_gram_[i][j] = Rational(cartan[i][j]) * r.norms_[i] / 2;
    r.cartan_inverse_ = inverse(cartan);

    r.weight_gram_.assign(l, RatVec(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            Rational s = 0;
            for (int a = 0; a < l; ++a)
                for (int b = 0; b < l; ++b)
                    s += r.cartan_inverse_[a][i] * r.root_gram_[a][b] * r.cartan_inverse_[b][j];
            r.weight_gram_[i][j] = s;
        }

    r.coweight_gram_.assign(l, IntVec(l, 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            Rational g = 4 * r.root_gram_[i][j] / (r.norms_[i] * r.norms_[j]);
            if (!is_integral(g)) throw ConsistencyError("coroot Gram matrix is not integral");
            r.coweight_gram_[i][j] = to_long_exact(g);
        }
    r.finish();
    return r;
}

void FiniteRootData::finish()
{
    const int l = rank();
    // Positive roots by height using root strings.
    std::set<IntVec> known;
    std::vector<IntVec> layer;
    for (int i = 0; i < l; ++i) {
        IntVec e(l, 0);
        e[i] = 1;
        layer.push_back(e);
        known.insert(e);
    }
    positive_roots_.clear();
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end(), std::greater<>());
        std::vector<IntVec> next;
        for (const auto& beta : layer) {
            positive_roots_.push_back(beta);
            const IntVec lab = root_to_labels(beta);
            for (int i = 0; i < l; ++i) {
                int p = 0;
                IntVec down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                if (p - lab[i] <= 0) continue;
                IntVec up = beta;
                up[i] += 1;
                if (known.insert(up).second) next.push_back(up);
            }
        }
        layer = std::move(next);
    }
    positive_labels_.clear();
    positive_coroots_.clear();
    two_rho_check_.assign(l, 0);
    for (const auto& beta : positive_roots_) {
        positive_labels_.push_back(root_to_labels(beta));
        positive_coroots_.push_back(coroot_of(beta));
        two_rho_check_ = add(two_rho_check_, positive_coroots_.back());
    }
    highest_root_.clear();
    highest_coroot_.clear();
    if (irreducible_ && l > 0) {
        highest_root_ = positive_roots_.back();
        highest_coroot_ = coroot_of(highest_root_);
    }
}

const IntVec& FiniteRootData::highest_root() const
{
    if (highest_root_.empty()) throw std::logic_error("highest root requested for a reducible system");
    return highest_root_;
}

const IntVec& FiniteRootData::highest_coroot() const
{
    if (highest_coroot_.empty()) throw std::logic_error("highest coroot requested for a reducible system");
    return highest_coroot_;
}

IntVec FiniteRootData::simple_root_labels(int i) const
{
    IntVec out(rank());
    for (int r = 0; r < rank(); ++r) out[r] = cartan_[r][i];
    return out;
}

IntVec FiniteRootData::root_to_labels(const IntVec& root) const { return mat_vec(cartan_, root); }

RatVec FiniteRootData::labels_to_root_coords(const RatVec& labels) const
{
    return mat_vec(cartan_inverse_, labels);
}

std::optional<IntVec> FiniteRootData::root_lattice_coords(const IntVec& labels) const
{
    const RatVec c = labels_to_root_coords(to_rational(labels));
    IntVec out;
    for (const auto& x : c) {
        if (!is_integral(x)) return std::nullopt;
        out.push_back(to_long_exact(x));
    }
    return out;
}

RatVec FiniteRootData::fundamental_coweight(int i) const
{
    RatVec out(rank());
    for (int r = 0; r < rank(); ++r) out[r] = cartan_inverse_[i][r];
    return out;
}

IntVec FiniteRootData::nu(const IntVec& coweight) const { return mat_vec(coweight_gram_, coweight); }
RatVec FiniteRootData::nu(const RatVec& coweight) const { return mat_vec(coweight_gram_, coweight); }

Rational FiniteRootData::weight_form(const RatVec& a, const RatVec& b) const
{
    return dot(a, mat_vec(weight_gram_, b));
}

Rational FiniteRootData::coweight_form(const RatVec& a, const RatVec& b) const
{
    return dot(a, mat_vec(coweight_gram_, b));
}

Rational FiniteRootData::coweight_form(const IntVec& a, const IntVec& b) const
{
    return Rational(dot(a, mat_vec(coweight_gram_, b)));
}

Rational FiniteRootData::root_norm(const IntVec& root) const
{
    return dot(to_rational(root), mat_vec(root_gram_, to_rational(root)));
}

IntVec FiniteRootData::coroot_of(const IntVec& root) const
{
    const Rational n = root_norm(root);
    IntVec out(rank());
    for (int i = 0; i < rank(); ++i) {
        Rational x = Rational(root[i]) * norms_[i] / n;
        if (!is_integral(x)) throw ConsistencyError("coroot has non-integral coordinates");
        out[i] = to_long_exact(x);
    }
    return out;
}

IntMat FiniteRootData::reflection_on_labels(const IntVec& root) const
{
    const IntVec lab = root_to_labels(root);
    const IntVec co = coroot_of(root);
    IntMat m = identity_matrix(rank());
    for (int r = 0; r < rank(); ++r)
        for (int c = 0; c < rank(); ++c) m[r][c] -= lab[r] * co[c];
    return m;
}

IntMat FiniteRootData::reflection_on_coroots(const IntVec& root) const
{
    const IntVec lab = root_to_labels(root);
    const IntVec co = coroot_of(root);
    IntMat m = identity_matrix(rank());
    for (int r = 0; r < rank(); ++r)
        for (int c = 0; c < rank(); ++c) m[r][c] -= co[r] * lab[c];
    return m;
}

AffineWeight AffineWeight::operator+(const AffineWeight& o) const
{
    return {add(dot, o.dot), level + o.level, delta + o.delta};
}

AffineWeight AffineWeight::operator-(const AffineWeight& o) const
{
    return {sub(dot, o.dot), level - o.level, delta - o.delta};
}

AffineWeight AffineWeight::operator*(const Rational& s) const
{
    return {scale(dot, s), level * s, delta * s};
}

bool AffineWeight::operator==(const AffineWeight& o) const
{
    return dot == o.dot && level == o.level && delta == o.delta;
}

bool AffineWeight::is_integral() const
{
    return affcone::is_integral(level) && affcone::is_integral(delta) &&
           std::all_of(dot.begin(), dot.end(), [](const Rational& q) { return affcone::is_integral(q); });
}

AffineCoweight AffineCoweight::operator+(const AffineCoweight& o) const
{
    return {add(dot, o.dot), c + o.c, d + o.d};
}

AffineCoweight AffineCoweight::operator-(const AffineCoweight& o) const
{
    return {sub(dot, o.dot), c - o.c, d - o.d};
}

AffineCoweight AffineCoweight::operator*(const Rational& s) const
{
    return {scale(dot, s), c * s, d * s};
}

bool AffineCoweight::operator==(const AffineCoweight& o) const
{
    return dot == o.dot && c == o.c && d == o.d;
}

std::shared_ptr<const AffineRootData> AffineRootData::build(const CartanType& type)
{
    auto out = std::make_shared<AffineRootData>();
    out->type_ = type;
    out->finite_ = FiniteRootData::from_type(type);
    const auto& f = out->finite_;
    const int l = f.rank();
    const IntMat& a = f.cartan();
    const IntVec& th = f.highest_root();
    const IntVec& thc = f.highest_coroot();

    out->cartan_.assign(l + 1, IntVec(l + 1, 0));
    out->cartan_[0][0] = 2;
    const IntVec th_lab = f.root_to_labels(th);
    for (int j = 0; j < l; ++j) {
        long s = 0;
        for (int k = 0; k < l; ++k) s += thc[k] * a[k][j];
        out->cartan_[0][j + 1] = -s;
        out->cartan_[j + 1][0] = -th_lab[j];
        for (int i = 0; i < l; ++i) out->cartan_[i + 1][j + 1] = a[i][j];
    }
    out->marks_ = {1};
    out->comarks_ = {1};
    for (int i = 0; i < l; ++i) {
        out->marks_.push_back(th[i]);
        out->comarks_.push_back(thc[i]);
    }
    out->dual_coxeter_ = 0;
    for (long x : out->comarks_) out->dual_coxeter_ += x;
    return out;
}

AffineWeight AffineRootData::zero_weight() const { return {RatVec(rank(), Rational(0)), 0, 0}; }

AffineWeight AffineRootData::Lambda() const { return {RatVec(rank(), Rational(0)), 1, 0}; }

AffineWeight AffineRootData::delta() const { return {RatVec(rank(), Rational(0)), 0, 1}; }

AffineWeight AffineRootData::fundamental_weight(int i) const
{
    if (i == 0) return Lambda();
    AffineWeight w = zero_weight();
    w.dot[i - 1] = 1;
    w.level = theta_check()[i - 1];
    return w;
}

AffineWeight AffineRootData::rho() const { return {RatVec(rank(), Rational(1)), dual_coxeter_, 0}; }

AffineWeight AffineRootData::simple_root(int i) const
{
    AffineWeight w = zero_weight();
    if (i == 0) {
        w.dot = to_rational(scale(finite_.root_to_labels(theta()), -1));
        w.delta = 1;
    } else {
        w.dot = to_rational(finite_.simple_root_labels(i - 1));
    }
    return w;
}

AffineCoweight AffineRootData::zero_coweight() const { return {RatVec(rank(), Rational(0)), 0, 0}; }

AffineCoweight AffineRootData::c() const { return {RatVec(rank(), Rational(0)), 1, 0}; }

AffineCoweight AffineRootData::d() const { return {RatVec(rank(), Rational(0)), 0, 1}; }

AffineCoweight AffineRootData::simple_coroot(int i) const
{
    AffineCoweight t = zero_coweight();
    if (i == 0) {
        t.dot = to_rational(scale(theta_check(), -1));
        t.c = 1;
    } else {
        t.dot[i - 1] = 1;
    }
    return t;
}

AffineCoweight AffineRootData::fundamental_coweight(int i) const
{
    if (i == 0) return d();
    AffineCoweight t = zero_coweight();
    t.dot = finite_.fundamental_coweight(i - 1);
    t.d = theta()[i - 1];
    return t;
}

Rational AffineRootData::pair(const AffineWeight& w, const AffineCoweight& t) const
{
    return dot(w.dot, t.dot) + w.level * t.c + w.delta * t.d;
}

Rational AffineRootData::form(const AffineWeight& a, const AffineWeight& b) const
{
    return finite_.weight_form(a.dot, b.dot) + a.level * b.delta + a.delta * b.level;
}

Rational AffineRootData::form(const AffineCoweight& a, const AffineCoweight& b) const
{
    return finite_.coweight_form(a.dot, b.dot) + a.c * b.d + a.d * b.c;
}

RatVec AffineRootData::affine_labels(const AffineWeight& w) const
{
    RatVec out;
    out.push_back(w.level - dot(theta_check(), w.dot));
    for (const auto& x : w.dot) out.push_back(x);
    return out;
}

AffineWeight AffineRootData::from_affine_labels(const RatVec& labels, const Rational& delta) const
{
    if (static_cast<int>(labels.size()) != num_nodes())
        throw std::invalid_argument("expected " + std::to_string(num_nodes()) + " affine labels");
    AffineWeight w;
    w.dot.assign(labels.begin() + 1, labels.end());
    w.level = labels[0];
    for (int i = 0; i < rank(); ++i) w.level += Rational(theta_check()[i]) * w.dot[i];
    w.delta = delta;
    return w;
}

bool AffineRootData::is_dominant(const AffineWeight& w) const
{
    for (const auto& a : affine_labels(w))
        if (a < 0) return false;
    return true;
}

std::optional<RatVec> AffineRootData::root_coords(const AffineWeight& w) const
{
    if (w.level != 0) return std::nullopt;
    const RatVec c = finite_.labels_to_root_coords(w.dot);
    RatVec out{w.delta};
    for (int j = 0; j < rank(); ++j) out.push_back(c[j] + w.delta * Rational(theta()[j]));
    return out;
}

long k_g_dot(const AffineRootData& data) { return lcm_of(data.theta()); }

std::vector<long> k_s_alternatives(const AffineRootData& data)
{
    const int l = data.rank();
    switch (data.type().family) {
    case 'A': return {1};
    case 'B': return {l >= 5 ? 4L : 2L};
    case 'C': return {2};
    case 'D': return {l == 4 ? 1L : 4L};
    case 'E': return {l == 6 ? 36L : l == 7 ? 144L : 3600L};
    case 'F': return {144};
    case 'G': return {2, 3};
    }
    throw std::invalid_argument("no saturation table entry for " + data.type().label());
}

long k_s(const AffineRootData& data) { return k_s_alternatives(data).front(); }

bool in_root_lattice(const AffineRootData& data, const AffineWeight& w)
{
    if (!is_integral(w.level) || !is_integral(w.delta))
        throw std::invalid_argument("root lattice test needs integral level and delta coefficient");
    if (w.level != 0) return false;
    for (const auto& x : data.finite().labels_to_root_coords(w.dot))
        if (!is_integral(x)) return false;
    return true;
}

std::string to_string(const AffineWeight& w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.dot.size(); ++i) {
        if (i) s += ",";
        s += to_string(w.dot[i]);
    }
    s += " | " + to_string(w.level) + " | " + to_string(w.delta) + ")";
    return s;
}

}  // namespace affcone
