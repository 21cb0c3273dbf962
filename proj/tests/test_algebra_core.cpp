#include <doctest.h>

#include <random>

#include "monodromy/cyclotomic.hpp"
#include "monodromy/hermitian.hpp"
#include "monodromy/matrix.hpp"

using namespace monodromy;

namespace {

Cyclotomic zeta(int k, long p = 1) { return Cyclotomic::root_of_unity(k, p); }

Cyclotomic random_cyclotomic(std::mt19937& rng, int max_order = 6) {
    std::uniform_int_distribution<int> order_pick(1, max_order);
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    const int k = order_pick(rng);
    std::vector<Rational> coeffs;
    for (int j = 0; j < k; ++j) coeffs.push_back(rational(num(rng), den(rng)));
    return Cyclotomic::from_coeffs(k, std::move(coeffs));
}

Matrix random_rational_matrix(std::mt19937& rng, int rows, int cols) {
    std::uniform_int_distribution<long> num(-4, 4);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Cyclotomic(Rational(num(rng)));
    return m;
}

} // namespace

TEST_SUITE("algebra_core") {

TEST_CASE("minimal polynomial relations") {
    CHECK(zeta(3, 2) + zeta(3) + Cyclotomic(1L) == Cyclotomic());
    CHECK(zeta(4) * zeta(4) == Cyclotomic(-1L));
    CHECK(zeta(5).conj() == zeta(5, 4));
}

TEST_CASE("mixed-order arithmetic embeds into the lcm order") {
    CHECK(zeta(2) * zeta(3) == zeta(6, 5));
    CHECK(zeta(6, 3) == zeta(2));
    CHECK((zeta(4) + zeta(6)).order() == 12);
}

TEST_CASE("field axioms on randomized triples") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const Cyclotomic a = random_cyclotomic(rng);
        const Cyclotomic b = random_cyclotomic(rng);
        const Cyclotomic c = random_cyclotomic(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("conjugation is an involutive field automorphism") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Cyclotomic a = random_cyclotomic(rng);
        const Cyclotomic b = random_cyclotomic(rng);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
}

TEST_CASE("roots of unity have unit modulus") {
    for (int k = 2; k <= 8; ++k) CHECK(zeta(k) * zeta(k).conj() == Cyclotomic(1L));
}

TEST_CASE("inverse") {
    std::mt19937 rng(99);
    int done = 0;
    while (done < 50) {
        const Cyclotomic a = random_cyclotomic(rng);
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == Cyclotomic(1L));
        ++done;
    }
    CHECK_THROWS(Cyclotomic().inverse());
}

TEST_CASE("exact_rank basics") {
    CHECK(exact_rank(Matrix::identity(2)) == 2);
    CHECK(exact_rank(Matrix(3, 4)) == 0);
    // third row is the sum of the first two
    CHECK(exact_rank(Matrix::from_int_rows({{1, 1, 0}, {0, 1, 1}, {1, 2, 1}})) == 2);
}

TEST_CASE("rank equals rank of the transpose") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> dim(1, 5);
        const Matrix m = random_rational_matrix(rng, dim(rng), dim(rng));
        CHECK(exact_rank(m) == exact_rank(m.transpose()));
    }
}

TEST_CASE("hermitian signature pinned cases") {
    const auto sig_of = [](Matrix m) { return hermitian_signature(hermitian_form(std::move(m))); };
    auto s = sig_of(Matrix::from_int_rows({{1, 0}, {0, -1}}));
    CHECK(s.positive == 1);
    CHECK(s.negative == 1);
    CHECK(s.radical == 0);
    s = sig_of(Matrix::from_int_rows({{2, -1}, {-1, 2}}));
    CHECK(s.positive == 2);
    CHECK(s.negative == 0);
    s = sig_of(Matrix::from_int_rows({{0, 1}, {1, 0}})); // hyperbolic-pair path
    CHECK(s.positive == 1);
    CHECK(s.negative == 1);
    s = sig_of(Matrix::from_int_rows({{1, 0}, {0, 0}}));
    CHECK(s.positive == 1);
    CHECK(s.radical == 1);
}

TEST_CASE("signature is a congruence invariant") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> small(-2, 2);
    int done = 0;
    while (done < 40) {
        const int n = 3;
        // random hermitian gram over Q(zeta_4)
        Matrix g(n, n);
        for (int i = 0; i < n; ++i) {
            g.at(i, i) = Cyclotomic(Rational(small(rng)));
            for (int j = i + 1; j < n; ++j) {
                const Cyclotomic z = Cyclotomic(Rational(small(rng))) +
                                     Cyclotomic(Rational(small(rng))) * Cyclotomic::root_of_unity(4, 1);
                g.at(i, j) = z;
                g.at(j, i) = z.conj();
            }
        }
        Matrix p(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                p.at(i, j) = Cyclotomic(Rational(small(rng))) +
                             Cyclotomic(Rational(small(rng))) * Cyclotomic::root_of_unity(4, 1);
        if (determinant(p).is_zero()) continue;
        const Matrix moved = p.transpose() * g * p.conjugate(); // gram of the pulled-back form
        const Signature a = hermitian_signature(hermitian_form(g));
        const Signature b = hermitian_signature(hermitian_form(moved));
        CHECK(a.positive == b.positive);
        CHECK(a.negative == b.negative);
        CHECK(a.radical == b.radical);
        ++done;
    }
}

TEST_CASE("sign refinement on real cyclotomic numbers") {
    // 2 cos(2 pi / 5) > 0 and 2 cos(4 pi / 5) < 0
    CHECK(sign_real_cyclotomic(zeta(5) + zeta(5, 4)) == 1);
    CHECK(sign_real_cyclotomic(zeta(5, 2) + zeta(5, 3)) == -1);
    CHECK(sign_real_cyclotomic(Cyclotomic()) == 0);
    // golden ratio minus its conjugate root: (z5 + z5^4) - (z5^2 + z5^3) = sqrt(5)
    CHECK(sign_real_cyclotomic(zeta(5) + zeta(5, 4) - zeta(5, 2) - zeta(5, 3)) == 1);
}

TEST_CASE("determinant and inverse") {
    const Matrix m = Matrix::from_int_rows({{2, 1}, {1, 1}});
    CHECK(determinant(m) == Cyclotomic(1L));
    CHECK(inverse(m) * m == Matrix::identity(2));
    CHECK_THROWS(inverse(Matrix::from_int_rows({{1, 1}, {1, 1}})));
}

TEST_CASE("kronecker product shape and values") {
    const Matrix a = Matrix::from_int_rows({{0, 1}, {1, 0}});
    const Matrix b = Matrix::from_int_rows({{2}});
    const Matrix k = kronecker_product(a, b);
    CHECK(k.rows() == 2);
    CHECK(k == Matrix::from_int_rows({{0, 2}, {2, 0}}));
}

} // TEST_SUITE
