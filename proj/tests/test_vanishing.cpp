#include <doctest.h>

#include <random>

#include "monodromy/errors.hpp"
#include "monodromy/vanishing.hpp"

using namespace monodromy;

namespace {

Cyclotomic q(long num, long den = 1) { return Cyclotomic(rational(num, den)); }

std::vector<Cyclotomic> vec(std::initializer_list<long> xs) {
    std::vector<Cyclotomic> v;
    for (long x : xs) v.push_back(q(x));
    return v;
}

Cyclotomic pair_with(const Matrix& gram, const std::vector<Cyclotomic>& x,
                     const std::vector<Cyclotomic>& y) {
    Cyclotomic s;
    for (int a = 0; a < gram.rows(); ++a)
        for (int b = 0; b < gram.cols(); ++b)
            if (!gram.at(a, b).is_zero()) s += x[static_cast<std::size_t>(a)] * gram.at(a, b) * y[static_cast<std::size_t>(b)];
    return s;
}

} // namespace

TEST_SUITE("vanishing_cycles") {

TEST_CASE("picard-lefschetz pinned values") {
    const Matrix a2 = Matrix::from_int_rows({{2, -1}, {-1, 2}});
    const auto delta = vec({1, 0});
    CHECK(pl_transform(delta, delta, a2, 1) == vec({-1, 0})); // reflection flips its root
    const auto perp = vec({1, 2}); // (perp, delta) = 2 - 2 = 0
    CHECK(pl_transform(perp, perp_with_delta_check_placeholder_ignored_below_0
    , a2, 1) == perp); // placeholder; replaced below
}

} // TEST_SUITE
