#include "affcone/root_data.hpp"

#include "doctest.h"

#include <functional>

using namespace affcone;

namespace {

const std::vector<std::string> all_types = {"A1", "A2", "A3", "A5", "B2", "B3", "B5", "C2", "C3", "C4", "D4",
                                            "D5", "D6", "E6", "E7", "E8", "F4", "G2"};

long classical_count(const CartanType& t)
{
    const long l = t.rank;
    switch (t.family) {
    case 'A': return l * (l + 1) / 2;
    case 'B':
    case 'C': return l * l;
    case 'D': return l * (l - 1);
    case 'E': return l == 6 ? 36 : l == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
    }
}

long classical_dual_coxeter(const CartanType& t)
{
    const long l = t.rank;
    switch (t.family) {
    case 'A': return l + 1;
    case 'B': return 2 * l - 1;
    case 'C': return l + 1;
    case 'D': return 2 * l - 2;
    case 'E': return l == 6 ? 12 : l == 7 ? 18 : 30;
    case 'F': return 9;
    default: return 4;
    }
}

void for_each_box_point(int dim, int radius, const std::function<void(const IntVec&)>& f)
{
    IntVec x(dim, -radius);
    while (true) {
        f(x);
        int k = 0;
        while (k < dim && x[k] == radius) x[k++] = -radius;
        if (k == dim) return;
        ++x[k];
    }
}

}  // namespace

TEST_CASE("type parsing")
{
    CHECK(CartanType::parse("A1~") == CartanType{'A', 1});
    CHECK(CartanType::parse("c_2").label() == "C2");
    CHECK(CartanType::parse("G2").affine_label() == "G2~");
    CHECK_THROWS_AS(CartanType::parse("H3"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("E9"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("D3"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse(""), std::invalid_argument);
}

TEST_CASE("finite invariants for every type")
{
    for (const auto& name : all_types) {
        CAPTURE(name);
        const auto t = CartanType::parse(name);
        const auto data = AffineRootData::build(t);
        const auto& f = data->finite();
        const int l = f.rank();

        CHECK(static_cast<long>(f.num_positive_roots()) == classical_count(t));
        CHECK(data->dual_coxeter() == classical_dual_coxeter(t));
        CHECK(f.root_norm(f.highest_root()) == 2);

        long h = 1;
        for (long x : f.highest_coroot()) h += x;
        CHECK(data->dual_coxeter() == h);

        // Duality of fundamental (co)weights with simple (co)roots.
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                const RatVec cw = f.fundamental_coweight(i);
                CHECK(dot(f.simple_root_labels(j), cw) == (i == j ? 1 : 0));
            }

        // Gram matrix symmetric, positive definite (Sylvester), W-invariant.
        const RatMat& g = f.weight_gram();
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) CHECK(g[i][j] == g[j][i]);
        for (int k = 1; k <= l; ++k) {
            RatMat m(k, RatVec(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) m[i][j] = g[i][j];
            Rational det = 1;
            for (int c = 0; c < k; ++c) {
                int p = c;
                while (p < k && m[p][c] == 0) ++p;
                REQUIRE(p < k);
                if (p != c) {
                    std::swap(m[p], m[c]);
                    det = -det;
                }
                det *= m[c][c];
                for (int r = c + 1; r < k; ++r) {
                    const Rational q = m[r][c] / m[c][c];
                    for (int j = c; j < k; ++j) m[r][j] -= q * m[c][j];
                }
            }
            CHECK(det > 0);
        }
        for (int s = 0; s < l; ++s) {
            IntVec e(l, 0);
            e[s] = 1;
            const IntMat refl = f.reflection_on_labels(e);
            for (int i = 0; i < l; ++i)
                for (int j = 0; j < l; ++j) {
                    RatVec a(l, Rational(0)), b(l, Rational(0));
                    a[i] = 1;
                    b[j] = 1;
                    CHECK(f.weight_form(mat_vec(refl, a), mat_vec(refl, b)) == g[i][j]);
                }
        }

        // Coroot lattice is even: diagonal of the integral Gram matrix.
        for (int i = 0; i < l; ++i) CHECK(f.coweight_gram()[i][i] % 2 == 0);
        const int radius = l <= 3 ? 4 : (l <= 5 ? 1 : 0);
        if (radius > 0)
            for_each_box_point(l, radius, [&](const IntVec& x) {
                const Rational n = f.coweight_form(x, x);
                CHECK(is_integral(n));
                CHECK(n.get_num() % 2 == 0);
            });

        // nu is compatible with both forms.
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                IntVec a(l, 0), b(l, 0);
                a[i] = 1;
                b[j] = 1;
                CHECK(f.weight_form(to_rational(f.nu(a)), to_rational(f.nu(b))) == f.coweight_form(a, b));
            }
    }
}

TEST_CASE("affine invariants for every type")
{
    for (const auto& name : all_types) {
        CAPTURE(name);
        const auto data = AffineRootData::build(CartanType::parse(name));
        const int n = data->num_nodes();
        for (int i = 0; i < n; ++i) {
            CHECK(data->pair(data->rho(), data->simple_coroot(i)) == 1);
            CHECK(data->pair(data->delta(), data->simple_coroot(i)) == 0);
            for (int j = 0; j < n; ++j) {
                CHECK(data->pair(data->fundamental_weight(i), data->simple_coroot(j)) == (i == j ? 1 : 0));
                CHECK(data->pair(data->simple_root(j), data->fundamental_coweight(i)) == (i == j ? 1 : 0));
                CHECK(data->pair(data->simple_root(j), data->simple_coroot(i)) == data->cartan()[i][j]);
            }
        }
        AffineWeight th = data->zero_weight();
        th.dot = to_rational(data->finite().root_to_labels(data->theta()));
        CHECK(data->simple_root(0) == data->delta() - th);

        AffineWeight sum = data->zero_weight();
        for (int i = 0; i < n; ++i) sum = sum + data->simple_root(i) * Rational(data->marks()[i]);
        CHECK(sum == data->delta());
        CHECK(data->pair(data->Lambda(), data->c()) == 1);
        CHECK(data->pair(data->delta(), data->d()) == 1);
        CHECK(data->pair(data->Lambda(), data->d()) == 0);
        CHECK(data->pair(data->delta(), data->c()) == 0);
    }
}

TEST_CASE("named constants")
{
    auto a1 = AffineRootData::build(CartanType::parse("A1~"));
    CHECK(a1->dual_coxeter() == 2);
    auto g2 = AffineRootData::build(CartanType::parse("G2~"));
    CHECK(g2->theta() == IntVec{3, 2});
    CHECK(k_g_dot(*g2) == 6);
    CHECK(AffineRootData::build(CartanType::parse("A2"))->finite().num_positive_roots() == 3);

    const std::vector<std::pair<std::string, long>> kg = {
        {"A1", 1}, {"A4", 1}, {"B2", 2}, {"B4", 2}, {"C3", 2}, {"C5", 2}, {"D5", 2},
        {"D7", 2}, {"E6", 6}, {"E7", 12}, {"E8", 60}, {"F4", 12}, {"G2", 6}};
    for (const auto& [name, value] : kg) {
        CAPTURE(name);
        CHECK(k_g_dot(*AffineRootData::build(CartanType::parse(name))) == value);
    }
    const std::vector<std::pair<std::string, long>> ks = {
        {"A3", 1}, {"B3", 2}, {"B4", 2}, {"B5", 4}, {"B7", 4}, {"C2", 2}, {"C6", 2}, {"D4", 1},
        {"D5", 4}, {"E6", 36}, {"E7", 144}, {"E8", 3600}, {"F4", 144}, {"G2", 2}};
    for (const auto& [name, value] : ks) {
        CAPTURE(name);
        CHECK(k_s(*AffineRootData::build(CartanType::parse(name))) == value);
    }
    CHECK(k_s_alternatives(*g2) == std::vector<long>{2, 3});
}

TEST_CASE("root lattice membership")
{
    auto a1 = AffineRootData::build(CartanType::parse("A1~"));
    CHECK(in_root_lattice(*a1, a1->delta()));
    CHECK_FALSE(in_root_lattice(*a1, a1->Lambda()));
    CHECK(in_root_lattice(*a1, a1->simple_root(1)));
    AffineWeight half = a1->zero_weight();
    half.dot[0] = 1;
    CHECK_FALSE(in_root_lattice(*a1, half));
    AffineWeight bad = a1->delta() * Rational(1, 2);
    CHECK_THROWS_AS(in_root_lattice(*a1, bad), std::invalid_argument);
}

TEST_CASE("levi subsystem from a Cartan submatrix")
{
    const IntMat a = {{2, 0, 0}, {0, 2, -1}, {0, -1, 2}};
    const auto f = FiniteRootData::from_cartan(a, "A1xA2");
    CHECK_FALSE(f.irreducible());
    CHECK(f.num_positive_roots() == 4);
    CHECK_THROWS(f.highest_root());
}
