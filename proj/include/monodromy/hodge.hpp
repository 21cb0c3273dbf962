#pragma once

#include <utility>
#include <vector>

#include "monodromy/graded.hpp"

namespace monodromy {

// Primitive Hodge numbers of one cohomology weight.  values[j] = h^{w-j, j}
// for j = 0..w, so the vector reads h^{w,0}, ..., h^{0,w}.
struct HodgeVector {
    int weight = 0;
    std::vector<long long> values;
    bool primitive = true;

    long long h(int p) const { return values.at(static_cast<std::size_t>(weight - p)); }
    long long total() const;
    bool symmetric() const; // h^{p,q} == h^{q,p}
};

// k-fold cyclic cover of projective (n+1)-space branched along a smooth
// degree-d hypersurface of dimension n; the eigenvalue index i selects the
// zeta_k^i eigenspace of the covering automorphism.
struct CoverSpec {
    int d = 0;
    int n = 0;
    int k = 0;
    int i = 0;
    void validate() const; // d >= 2, n >= 0, 2 <= k | d, 1 <= i <= k-1
};

// dim R^a of the Fermat Jacobian ring in nvars variables (degree-d Fermat);
// negative degrees give 0.
int fermat_graded_dim(int d, int nvars, int a);

// chi(d, n) by the branched-cover recursion with chi(d, 0) = d.
long long euler_characteristic(int d, int n);

// Primitive middle Betti number, computed by the recursion
// B(d,n) = (d-1)(B(d,n-1) + (-1)^n) and by the closed form, which must agree.
long long primitive_betti(int d, int n);

// Primitive h^{p,q} of the degree-d, dimension-n hypersurface:
// h^{n-q,q} = dim R^((q+1)d - (n+2)) for the Fermat ring in n+2 variables.
HodgeVector hodge_hypersurface(int d, int n);

// Eigenspace Hodge numbers of the cover, weight n+1:
// h^{p,q}(i) = dim R^((q+1)d - i*(d/k) - (n+2)); not symmetric in general.
HodgeVector hodge_cyclic_eigenspace(const CoverSpec& spec);

// The substitution y -> z^(d/k) identifies the (k, zeta_k^i) eigensystem with
// the (d, zeta_d^(i*d/k)) one; checks the Hodge numbers agree componentwise.
bool substitution_isomorphism_check(int d, int n, int k, int i);

// Common dimension of the nontrivial eigenspaces of the d-fold cover,
// B(d, n+1)/(d-1); cross-checked against every eigenspace Hodge sum.
long long eigenspace_dimension(int d, int n);

// Signature (r, s) of the cup product on primitive cohomology, n even:
// r sums h^{p,q} over even p, s over odd p.
std::pair<long long, long long> signature_primitive(int d, int n);

// Hermitian signature of a non-real eigenspace; convention pinned so that
// (d,n,k,i) = (3,2,3,1) yields (1,4).
std::pair<long long, long long> eigenspace_signature(const CoverSpec& spec);

long long rank_complex(int d, int n); // floor(B/2)
long long rank_real(int d, int n);    // n odd: B/2; n even: min of the signature

struct FirstHodge {
    int p = 0;
    int q = 0;
    long long value = 0;
};

// Highest-p nonzero primitive Hodge number of the cubic of dimension n,
// by the three congruence classes of n mod 3; cross-checked against
// hodge_hypersurface(3, n).
FirstHodge first_hodge_cubic(int n);

// Both monotonicity inequalities at one instance: growth in degree, and decay
// toward the ends of the Hodge diamond (the latter only binds when p >= q).
bool hodge_monotonicity_check(int d, int n, int p);

// #{x in Z^nvars : 0 <= x_i <= dmax, sum = k} via the convolution recursion
// L(n, k) = sum_{i=k-dmax}^{k} L(n-1, i).
long long lattice_count(int dmax, int nvars, int k);

// Double suspension y1^2 + y2^2 + P shifts primitive Hodge numbers by (1,1):
// compares the degree-two_d hypersurface of dimension n-1 in n+1 variables
// against the weighted hypersurface through the two bookkeeping routes.
bool suspension_periodicity_check(int two_d, int n);

} // namespace monodromy
