#include <doctest.h>

#include <random>

#include "monodromy/errors.hpp"
#include "monodromy/graded.hpp"

using namespace monodromy;

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Polynomial var_power(int nvars, int v, int e, Rational c = Rational(1)) {
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(v)] = e;
    return monomial_poly(std::move(m), std::move(c));
}

Polynomial poly_sum(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b) {
        auto it = r.find(m);
        if (it == r.end()) r.emplace(m, c);
        else {
            it->second += c;
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

} // namespace

TEST_SUITE("graded_rings") {

TEST_CASE("monomial_basis enumeration and order") {
    const auto b1 = monomial_basis(standard_ring(2), 2);
    REQUIRE(b1.size() == 3);
    CHECK(b1[0] == Monomial{2, 0});
    CHECK(b1[1] == Monomial{1, 1});
    CHECK(b1[2] == Monomial{0, 2});

    const WeightedRing weighted{3, {1, 1, 2}};
    const auto b2 = monomial_basis(weighted, 2);
    REQUIRE(b2.size() == 4);
    CHECK(b2[0] == Monomial{2, 0, 0});
    CHECK(b2[1] == Monomial{1, 1, 0});
    CHECK(b2[2] == Monomial{0, 2, 0});
    CHECK(b2[3] == Monomial{0, 0, 1});

    CHECK(monomial_basis(standard_ring(5), 0).size() == 1);
    CHECK(monomial_basis(standard_ring(2), -1).empty());
}

TEST_CASE("fermat graded dimensions") {
    CHECK(graded_dim(fermat_jacobian_ideal(3, 4), 2) == 6);  // square-free quadrics
    CHECK(graded_dim(fermat_jacobian_ideal(4, 4), 4) == 19); // quartic surface middle slice
    CHECK(graded_dim(fermat_jacobian_ideal(3, 4), socle_degree(3, 4) + 1) == 0);
    CHECK(graded_dim(fermat_jacobian_ideal(5, 3), 0) == 1);
    CHECK(graded_dim(fermat_jacobian_ideal(2, 4), 0) == 1);
    CHECK(graded_dim(fermat_jacobian_ideal(2, 4), 1) == 0);
}

TEST_CASE("fast path and linear-algebra path agree") {
    for (int d = 2; d <= 5; ++d)
        for (int nvars = 2; nvars <= 5; ++nvars) {
            const GradedIdeal ideal = fermat_jacobian_ideal(d, nvars);
            const int t = socle_degree(d, nvars);
            for (int a = 0; a <= t; ++a) {
                // dense matrix footprint of the rank route; skip huge slices
                const long long rows = binom(a + nvars - 1, nvars - 1);
                const long long cols =
                    static_cast<long long>(nvars) * binom(a - (d - 1) + nvars - 1, nvars - 1);
                if (rows * cols > 1'000'000) continue;
                CAPTURE(d, nvars, a);
                CHECK(graded_dim(ideal, a) == graded_dim_linalg(ideal, a));
            }
        }
}

TEST_CASE("quotient dimensions are symmetric and sum to the product bound") {
    for (int d = 2; d <= 5; ++d)
        for (int nvars = 2; nvars <= 5; ++nvars) {
            const GradedIdeal ideal = fermat_jacobian_ideal(d, nvars);
            const int t = socle_degree(d, nvars);
            long long sum = 0, expected = 1;
            for (int a = 0; a <= t; ++a) {
                CHECK(graded_dim(ideal, a) == graded_dim(ideal, t - a));
                sum += graded_dim(ideal, a);
            }
            for (int v = 0; v < nvars; ++v) expected *= d - 1;
            CHECK(sum == expected);
        }
}

TEST_CASE("macaulay pairing pinned cases") {
    CHECK(macaulay_check(3, 4, 2));
    CHECK(macaulay_check(4, 4, 0));
    CHECK(macaulay_check(3, 5, 1));
    CHECK(graded_dim(fermat_jacobian_ideal(3, 5), 1) == 5);
    CHECK(graded_dim(fermat_jacobian_ideal(3, 5), 4) == 5);
    CHECK_THROWS_AS(macaulay_check(3, 4, 5), OutOfRange);
}

TEST_CASE("macaulay pairing against a brute-force oracle") {
    // d=3, nvars=4, a=2: all products of square-free quadrics, checked by hand
    const GradedIdeal ideal = fermat_jacobian_ideal(3, 4);
    const QuotientPiece left(ideal, 2);
    REQUIRE(left.dim() == 6);
    const Monomial socle{1, 1, 1, 1};
    int perfect_rows = 0;
    for (const Monomial& a : left.basis()) {
        int hits = 0;
        for (const Monomial& b : left.basis())
            if (monomial_product(a, b) == socle) ++hits;
        if (hits == 1) ++perfect_rows;
    }
    CHECK(perfect_rows == 6); // each basis monomial pairs with exactly one partner
    CHECK(macaulay_check(3, 4, 2));
}

TEST_CASE("multiplication maps") {
    const GradedIdeal cubic4 = fermat_jacobian_ideal(3, 4);
    const Polynomial m0 = monomial_poly(Monomial{0, 1, 1, 1}); // x1 x2 x3
    CHECK_FALSE(multiplication_map(cubic4, m0, 1).is_zero());
    CHECK(multiplication_map(cubic4, var_power(4, 0, 3), 1).is_zero());        // x0^3 in J
    const Polynomial gen_multiple = monomial_poly(Monomial{2, 1, 0, 0});       // x0^2 x1
    CHECK(multiplication_map(cubic4, gen_multiple, 1).is_zero());
}

TEST_CASE("multiplication maps compose") {
    const GradedIdeal quartic3 = fermat_jacobian_ideal(4, 3);
    std::mt19937 rng(2025);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial q1 = var_power(3, pick(rng), 1);
        const Polynomial q2 = var_power(3, pick(rng), 1);
        const int a = pick(rng);
        const Matrix lhs = multiplication_map(quartic3, poly_product(q1, q2), a);
        const Matrix rhs = multiplication_map(quartic3, q2, a + 1) * multiplication_map(quartic3, q1, a);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("torelli witness search") {
    const GradedIdeal cubic4 = fermat_jacobian_ideal(3, 4);
    const auto w = torelli_witness(cubic4, 1, 3);
    REQUIRE(w.has_value());
    CHECK(w->first == Monomial{1, 0, 0, 0});
    CHECK(w->second == Monomial{0, 1, 1, 1});
    CHECK(monomial_product(w->first, w->second) == Monomial{1, 1, 1, 1});

    CHECK_FALSE(torelli_witness(cubic4, socle_degree(3, 4) + 1, 3).has_value());

    // quartic plane curve data: witness exists at a = 2, first found in lex order
    const GradedIdeal quartic3 = fermat_jacobian_ideal(4, 3);
    const auto w2 = torelli_witness(quartic3, 2, 4);
    REQUIRE(w2.has_value());
    CHECK(w2->first == Monomial{2, 0, 0});
    CHECK(w2->second == Monomial{0, 2, 2});
    // deterministic: same pair on recomputation
    CHECK(torelli_witness(quartic3, 2, 4) == w2);
}

TEST_CASE("generic (non-monomial) ideals go through the exact-rank route") {
    // Jacobian ideal of a smooth non-Fermat plane cubic: same Hilbert function
    // as the Fermat one.
    const int nvars = 3;
    std::vector<Polynomial> gens;
    for (int v = 0; v < nvars; ++v) {
        Polynomial g = var_power(nvars, v, 2, Rational(3));
        Monomial other(static_cast<std::size_t>(nvars), 1);
        other[static_cast<std::size_t>(v)] = 0;
        g = poly_sum(g, monomial_poly(other, Rational(1)));
        gens.push_back(g);
    }
    const GradedIdeal hesse = make_ideal(standard_ring(nvars), gens);
    CHECK_FALSE(hesse.monomial_fast_path);
    const GradedIdeal fermat = fermat_jacobian_ideal(3, 3);
    for (int a = 0; a <= socle_degree(3, 3) + 1; ++a) CHECK(graded_dim(hesse, a) == graded_dim(fermat, a));

    // small hand-checked quotient: (x^2 - y^2, xy) in two variables
    std::vector<Polynomial> gens2;
    gens2.push_back(poly_sum(var_power(2, 0, 2), var_power(2, 1, 2, Rational(-1))));
    gens2.push_back(monomial_poly(Monomial{1, 1}));
    const GradedIdeal pinch = make_ideal(standard_ring(2), gens2);
    CHECK(graded_dim(pinch, 0) == 1);
    CHECK(graded_dim(pinch, 1) == 2);
    CHECK(graded_dim(pinch, 2) == 1);
    CHECK(graded_dim(pinch, 3) == 0);
}

TEST_CASE("homogeneity is enforced") {
    Polynomial bad = poly_sum(var_power(2, 0, 2), var_power(2, 1, 1));
    CHECK_THROWS(make_ideal(standard_ring(2), {bad}));
}

} // TEST_SUITE
