#include <doctest.h>

#include "monodromy/errors.hpp"
#include "monodromy/hodge.hpp"

using namespace monodromy;

TEST_SUITE("hodge_theory") {

TEST_CASE("euler characteristic recursion") {
    CHECK(euler_characteristic(3, 0) == 3);
    CHECK(euler_characteristic(3, 1) == 0);  // smooth cubic curve is a torus
    CHECK(euler_characteristic(4, 2) == 24); // K3
}

TEST_CASE("primitive Betti numbers") {
    CHECK(primitive_betti(3, 3) == 10);
    CHECK(primitive_betti(4, 2) == 21);
    CHECK(primitive_betti(5, 1) == 12);
    CHECK(primitive_betti(3, 1) == 2);
    CHECK(primitive_betti(3, 2) == 6);
    CHECK(primitive_betti(4, 1) == 6);
    CHECK(primitive_betti(2, 1) == 0);
}

TEST_CASE("Betti number equals the Hodge sum") {
    for (int d = 2; d <= 6; ++d)
        for (int n = 0; n <= 5; ++n) {
            CAPTURE(d, n);
            CHECK(primitive_betti(d, n) == hodge_hypersurface(d, n).total());
        }
}

TEST_CASE("hypersurface Hodge vectors") {
    CHECK(hodge_hypersurface(4, 2).values == std::vector<long long>{1, 19, 1});
    CHECK(hodge_hypersurface(3, 3).values == std::vector<long long>{0, 5, 5, 0});
    CHECK(hodge_hypersurface(3, 2).values == std::vector<long long>{0, 6, 0});
    CHECK(hodge_hypersurface(5, 0).values == std::vector<long long>{4}); // d-1 points, reduced
    CHECK(hodge_hypersurface(4, 2).symmetric());
}

TEST_CASE("cyclic cover eigenspaces") {
    CHECK(hodge_cyclic_eigenspace({3, 2, 3, 1}).values == std::vector<long long>{0, 4, 1, 0});
    CHECK(hodge_cyclic_eigenspace({3, 2, 3, 2}).values == std::vector<long long>{0, 1, 4, 0});
    // rational double-cover case: negative numerator degree kills the top slot
    CHECK(hodge_cyclic_eigenspace({4, 1, 2, 1}).values == std::vector<long long>{0, 7, 0});
    CHECK(hodge_cyclic_eigenspace({3, 1, 3, 1}).values == std::vector<long long>{0, 3, 0});
}

TEST_CASE("substitution y = z^(d/k) preserves eigenspace data") {
    CHECK(substitution_isomorphism_check(6, 1, 2, 1)); // also equals (6,1,6,3)
    CHECK(substitution_isomorphism_check(4, 2, 2, 1));
    CHECK(substitution_isomorphism_check(3, 2, 3, 1));
    CHECK(substitution_isomorphism_check(4, 1, 2, 1));
}

TEST_CASE("d-fold cover eigenspaces sum to the hypersurface one dimension up") {
    for (int d = 2; d <= 5; ++d)
        for (int n = 0; n <= 3; ++n) {
            const HodgeVector up = hodge_hypersurface(d, n + 1);
            std::vector<long long> sums(up.values.size(), 0);
            for (int i = 1; i <= d - 1; ++i) {
                const HodgeVector hv = hodge_cyclic_eigenspace({d, n, d, i});
                for (std::size_t j = 0; j < sums.size(); ++j) sums[j] += hv.values[j];
            }
            CAPTURE(d, n);
            CHECK(sums == up.values);
        }
}

TEST_CASE("conjugation symmetry h^{p,q}(i) = h^{q,p}(k-i)") {
    for (int d = 2; d <= 6; ++d)
        for (int n = 0; n <= 3; ++n)
            for (int k = 2; k <= d; ++k) {
                if (d % k != 0) continue;
                for (int i = 1; i <= k - 1; ++i) {
                    const HodgeVector a = hodge_cyclic_eigenspace({d, n, k, i});
                    const HodgeVector b = hodge_cyclic_eigenspace({d, n, k, k - i});
                    std::vector<long long> reversed(b.values.rbegin(), b.values.rend());
                    CAPTURE(d, n, k, i);
                    CHECK(a.values == reversed);
                }
            }
}

TEST_CASE("eigenspace dimension formula") {
    CHECK(eigenspace_dimension(3, 2) == 5);
    CHECK(eigenspace_dimension(3, 1) == 3);
    CHECK(eigenspace_dimension(2, 3) == primitive_betti(2, 4));
}

TEST_CASE("signatures") {
    CHECK(signature_primitive(4, 2) == std::pair<long long, long long>{2, 19});
    CHECK(signature_primitive(3, 2) == std::pair<long long, long long>{0, 6});
    CHECK(signature_primitive(3, 4) == std::pair<long long, long long>{20, 2});
    CHECK_THROWS_AS(signature_primitive(4, 1), OddDimension);
}

TEST_CASE("eigenspace signatures") {
    CHECK(eigenspace_signature({3, 2, 3, 1}) == std::pair<long long, long long>{1, 4});
    CHECK(eigenspace_signature({3, 2, 3, 2}) == std::pair<long long, long long>{4, 1});
    CHECK(eigenspace_signature({3, 1, 3, 1}) == std::pair<long long, long long>{0, 3});
    CHECK_THROWS_AS(eigenspace_signature({4, 2, 2, 1}), RealEigenvalue);
}

TEST_CASE("ranks") {
    CHECK(rank_complex(3, 1) == 1);
    CHECK(rank_complex(4, 1) == 3);
    CHECK(rank_complex(3, 2) == 3);
    CHECK(rank_complex(3, 3) == 5);
    CHECK(rank_real(3, 2) == 0);
    CHECK(rank_real(3, 1) == 1);
    CHECK(rank_real(4, 2) == 2);
    CHECK(rank_real(3, 3) == 5);
}

TEST_CASE("real rank is at least two away from the exceptional pairs") {
    for (int d = 3; d <= 7; ++d)
        for (int n = 1; n <= 6; ++n) {
            if ((d == 3 && n == 1) || (d == 3 && n == 2)) continue;
            CAPTURE(d, n);
            CHECK(rank_real(d, n) >= 2);
        }
}

TEST_CASE("first Hodge number of cubics") {
    const FirstHodge a = first_hodge_cubic(3);
    CHECK((a.p == 2 && a.q == 1 && a.value == 5));
    const FirstHodge b = first_hodge_cubic(4);
    CHECK((b.p == 3 && b.q == 1 && b.value == 1));
    const FirstHodge c = first_hodge_cubic(2);
    CHECK((c.p == 1 && c.q == 1 && c.value == 6));
}

TEST_CASE("Hodge monotonicity instances") {
    CHECK(hodge_monotonicity_check(3, 2, 1));
    CHECK(hodge_monotonicity_check(4, 2, 2));
    CHECK(hodge_monotonicity_check(3, 4, 2));
}

TEST_CASE("lattice point counts") {
    CHECK(lattice_count(2, 4, 4) == 19);
    for (int d = 2; d <= 5; ++d)
        for (int k = 0; k <= d; ++k) CHECK(lattice_count(d, 2, k) == k + 1);
    CHECK(lattice_count(7, 5, 0) == 1);
    CHECK(lattice_count(2, 3, 7) == 0);
}

TEST_CASE("lattice counts: brute-force oracle at the quartic point") {
    long long count = 0;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                for (int e = 0; e <= 2; ++e)
                    if (a + b + c + e == 4) ++count;
    CHECK(count == 19);
    CHECK(lattice_count(2, 4, 4) == count);
}

TEST_CASE("lattice counts are symmetric and strictly unimodal") {
    for (int dmax = 1; dmax <= 4; ++dmax)
        for (int n = 2; n <= 5; ++n) {
            const int top = dmax * n;
            for (int k = 0; k <= top; ++k) CHECK(lattice_count(dmax, n, k) == lattice_count(dmax, n, top - k));
            for (int k = 0; 2 * (k + 1) <= top; ++k) {
                CAPTURE(dmax, n, k);
                CHECK(lattice_count(dmax, n, k + 1) > lattice_count(dmax, n, k));
            }
        }
}

TEST_CASE("suspension periodicity") {
    CHECK(suspension_periodicity_check(4, 2)); // quartic curve, genus 3
    CHECK(suspension_periodicity_check(6, 2)); // sextic curve, genus 10
    CHECK(suspension_periodicity_check(2, 2)); // conic: both sides vanish
    CHECK(hodge_hypersurface(4, 1).values == std::vector<long long>{3, 3});
}

TEST_CASE("input validation") {
    CHECK_THROWS(hodge_hypersurface(1, 2));
    CHECK_THROWS(hodge_cyclic_eigenspace({6, 1, 4, 1})); // k does not divide d
    CHECK_THROWS(hodge_cyclic_eigenspace({6, 1, 3, 3})); // i out of range
    CHECK_THROWS(lattice_count(-1, 2, 0));
    CHECK_THROWS(suspension_periodicity_check(5, 2));
}

} // TEST_SUITE
