#include "monodromy/hodge.hpp"

#include <stdexcept>

#include "monodromy/errors.hpp"

namespace monodromy {

long long HodgeVector::total() const {
    long long sum = 0;
    for (long long v : values) sum += v;
    return sum;
}

bool HodgeVector::symmetric() const {
    for (std::size_t j = 0; j < values.size(); ++j)
        if (values[j] != values[values.size() - 1 - j]) return false;
    return true;
}

void CoverSpec::validate() const {
    if (d < 2) throw std::invalid_argument("cover degree d must be >= 2");
    if (n < 0) throw std::invalid_argument("branch dimension n must be >= 0");
    if (k < 2 || d % k != 0) throw std::invalid_argument("cover order k must be >= 2 and divide d");
    if (i < 1 || i > k - 1) throw std::invalid_argument("eigenvalue index must satisfy 1 <= i <= k-1");
}

int fermat_graded_dim(int d, int nvars, int a) {
    if (a < 0) return 0;
    return graded_dim(fermat_jacobian_ideal(d, nvars), a);
}

long long euler_characteristic(int d, int n) {
    if (d < 1 || n < 0) throw std::invalid_argument("euler_characteristic needs d >= 1, n >= 0");
    long long chi = d;
    for (int m = 1; m <= n; ++m) chi = static_cast<long long>(d) * (m + 1) + (1 - d) * chi;
    return chi;
}

namespace {

long long ipow(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

long long betti_recursion(int d, int n) {
    long long b = d - 1;
    for (int m = 1; m <= n; ++m) b = (d - 1) * (b + (m % 2 == 0 ? 1 : -1));
    return b;
}

long long betti_closed_form(int d, int n) {
    const long long sign = (n % 2 == 0) ? 1 : -1;
    const long long p = ipow(d - 1, n);
    if ((p - sign) % d != 0) throw InternalInconsistency("betti closed form: non-integral term");
    return p * (d - 2) + (p - sign) / d + sign;
}

} // namespace

long long primitive_betti(int d, int n) {
    if (d < 2 || n < 0) throw std::invalid_argument("primitive_betti needs d >= 2, n >= 0");
    const long long a = betti_recursion(d, n);
    const long long b = betti_closed_form(d, n);
    if (a != b) throw InternalInconsistency("betti recursion and closed form disagree");
    return a;
}

HodgeVector hodge_hypersurface(int d, int n) {
    if (d < 2 || n < 0) throw std::invalid_argument("hodge_hypersurface needs d >= 2, n >= 0");
    HodgeVector hv;
    hv.weight = n;
    for (int q = 0; q <= n; ++q)
        hv.values.push_back(fermat_graded_dim(d, n + 2, (q + 1) * d - (n + 2)));
    return hv;
}

HodgeVector hodge_cyclic_eigenspace(const CoverSpec& spec) {
    spec.validate();
    HodgeVector hv;
    hv.weight = spec.n + 1;
    const int step = spec.d / spec.k;
    for (int q = 0; q <= spec.n + 1; ++q)
        hv.values.push_back(
            fermat_graded_dim(spec.d, spec.n + 2, (q + 1) * spec.d - spec.i * step - (spec.n + 2)));
    return hv;
}

bool substitution_isomorphism_check(int d, int n, int k, int i) {
    const CoverSpec lhs{d, n, k, i};
    const CoverSpec rhs{d, n, d, i * (d / k)};
    const HodgeVector a = hodge_cyclic_eigenspace(lhs);
    const HodgeVector b = hodge_cyclic_eigenspace(rhs);
    return a.values == b.values;
}

long long eigenspace_dimension(int d, int n) {
    if (d < 2 || n < 0) throw std::invalid_argument("eigenspace_dimension needs d >= 2, n >= 0");
    const long long b = primitive_betti(d, n + 1);
    if (b % (d - 1) != 0)
        throw InternalInconsistency("primitive Betti number not divisible by d-1");
    const long long dim = b / (d - 1);
    for (int i = 1; i <= d - 1; ++i) {
        const HodgeVector hv = hodge_cyclic_eigenspace(CoverSpec{d, n, d, i});
        if (hv.total() != dim)
            throw InternalInconsistency("eigenspace Hodge sum disagrees with Betti count");
    }
    return dim;
}

std::pair<long long, long long> signature_primitive(int d, int n) {
    if (n % 2 != 0) throw OddDimension("signature_primitive needs even dimension n");
    const HodgeVector hv = hodge_hypersurface(d, n);
    long long r = 0, s = 0;
    for (int p = 0; p <= n; ++p) (p % 2 == 0 ? r : s) += hv.h(p);
    return {r, s};
}

std::pair<long long, long long> eigenspace_signature(const CoverSpec& spec) {
    spec.validate();
    if (2 * spec.i == spec.k)
        throw RealEigenvalue("eigenvalue -1 carries a real structure; use the parity rules instead");
    const HodgeVector hv = hodge_cyclic_eigenspace(spec);
    long long p = 0, q = 0;
    for (std::size_t j = 0; j < hv.values.size(); ++j)
        (j % 2 == 0 ? p : q) += hv.values[j];
    return {p, q};
}

long long rank_complex(int d, int n) { return primitive_betti(d, n) / 2; }

long long rank_real(int d, int n) {
    if (n % 2 != 0) {
        const long long b = primitive_betti(d, n);
        if (b % 2 != 0) throw InternalInconsistency("odd-dimensional Betti number is odd");
        return b / 2;
    }
    const auto [r, s] = signature_primitive(d, n);
    return std::min(r, s);
}

FirstHodge first_hodge_cubic(int n) {
    if (n < 1) throw std::invalid_argument("first_hodge_cubic needs n >= 1");
    const int k = n / 3;
    FirstHodge fh;
    switch (n % 3) {
        case 0:
            fh = {2 * k, k, static_cast<long long>(n) + 2};
            break;
        case 1:
            fh = {2 * k + 1, k, 1};
            break;
        default:
            fh = {2 * k + 1, k + 1, static_cast<long long>(n + 1) * (n + 2) / 2};
            break;
    }
    const HodgeVector hv = hodge_hypersurface(3, n);
    if (hv.h(fh.p) != fh.value)
        throw InternalInconsistency("first cubic Hodge number disagrees with the residue computation");
    for (int p = fh.p + 1; p <= n; ++p)
        if (hv.h(p) != 0)
            throw InternalInconsistency("a Hodge number above the predicted first one is nonzero");
    return fh;
}

bool hodge_monotonicity_check(int d, int n, int p) {
    if (p < 0 || p > n) throw std::invalid_argument("p must lie in [0, n]");
    const int q = n - p;
    const HodgeVector here = hodge_hypersurface(d, n);
    const HodgeVector next = hodge_hypersurface(d + 1, n);
    const bool grows_in_degree = next.h(p) > here.h(p);
    bool decays_outward = true;
    if (p >= q) {
        const long long outer = (q >= 1) ? here.h(p + 1) : 0;
        decays_outward = here.h(p) > outer;
    }
    return grows_in_degree && decays_outward;
}

long long lattice_count(int dmax, int nvars, int k) {
    if (dmax < 0 || nvars < 1) throw std::invalid_argument("lattice_count needs dmax >= 0, nvars >= 1");
    if (k < 0 || k > dmax * nvars) return 0;
    std::vector<long long> prev(static_cast<std::size_t>(dmax) + 1, 1); // one variable
    for (int n = 2; n <= nvars; ++n) {
        std::vector<long long> cur(static_cast<std::size_t>(dmax) * n + 1, 0);
        for (int j = 0; j < static_cast<int>(cur.size()); ++j) {
            long long sum = 0;
            for (int i = j - dmax; i <= j; ++i)
                if (i >= 0 && i < static_cast<int>(prev.size())) sum += prev[static_cast<std::size_t>(i)];
            cur[static_cast<std::size_t>(j)] = sum;
        }
        prev = std::move(cur);
    }
    return prev[static_cast<std::size_t>(k)];
}

bool suspension_periodicity_check(int two_d, int n) {
    if (two_d < 2 || two_d % 2 != 0) throw std::invalid_argument("suspension degree must be even and >= 2");
    if (n < 1) throw std::invalid_argument("suspension check needs n >= 1");
    // Branch hypersurface X: degree two_d, dimension n-1, n+1 variables.
    std::vector<long long> left;
    for (int q = 0; q <= n - 1; ++q)
        left.push_back(fermat_graded_dim(two_d, n + 1, (q + 1) * two_d - (n + 1)));
    // Double suspension y1^2 + y2^2 + P in weighted projective space: the x's
    // have weight one, the y's weight two_d/2, and numerators avoid y1, y2
    // since both lie in the Jacobian ideal.  The volume form picks up the two
    // extra weights, which is the only change to the degree bookkeeping.
    const int omega_weight = (n + 1) + two_d;
    std::vector<long long> right;
    for (int q = 0; q <= n + 1; ++q)
        right.push_back(fermat_graded_dim(two_d, n + 1, (q + 1) * two_d - omega_weight));
    if (right.front() != 0 || right.back() != 0) return false;
    for (int q = 0; q <= n - 1; ++q)
        if (left[static_cast<std::size_t>(q)] != right[static_cast<std::size_t>(q) + 1]) return false;
    return true;
}

} // namespace monodromy
