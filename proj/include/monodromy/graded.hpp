#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monodromy/matrix.hpp"
#include "monodromy/rational.hpp"

namespace monodromy {

// Weighted polynomial ring Q[x_0..x_{nvars-1}] with positive variable weights.
struct WeightedRing {
    int nvars = 0;
    std::vector<int> weights; // one per variable
};

WeightedRing standard_ring(int nvars); // all weights 1

// Exponent vector; length = nvars of the ambient ring.
using Monomial = std::vector<int>;

int weighted_degree(const WeightedRing& ring, const Monomial& m);
bool divides(const Monomial& divisor, const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);
std::string monomial_to_string(const Monomial& m);

// Sparse polynomial: exponent vector -> coefficient, zero coefficients absent.
using Polynomial = std::map<Monomial, Rational>;

Polynomial monomial_poly(Monomial m, Rational coeff = Rational(1));
Polynomial poly_product(const Polynomial& a, const Polynomial& b);
// Degree when homogeneous; nullopt for the zero polynomial or mixed degrees.
std::optional<int> homogeneous_degree(const WeightedRing& ring, const Polynomial& p);

// Graded ideal with homogeneous generators.  When every generator is a single
// monomial, quotient computations take the divisibility fast path; otherwise
// they go degree by degree through exact rank.
struct GradedIdeal {
    WeightedRing ring;
    std::vector<Polynomial> generators;
    std::vector<int> generator_degrees;
    bool monomial_fast_path = false;
    std::vector<Monomial> generator_monomials; // filled iff monomial_fast_path
};

GradedIdeal make_ideal(WeightedRing ring, std::vector<Polynomial> generators);

// Jacobian ideal of the Fermat hypersurface of degree d in nvars variables:
// (x_i^(d-1)), standard weights.
GradedIdeal fermat_jacobian_ideal(int d, int nvars);

// All monomials of the exact weighted degree, descending lexicographic in the
// exponent vector (x_0-heaviest first); deterministic.
std::vector<Monomial> monomial_basis(const WeightedRing& ring, int degree);

// dim (ring/ideal)^a.  Negative degrees give 0.
int graded_dim(const GradedIdeal& ideal, int a);

// Same dimension through the concatenated multiplication maps
// (+) S^(a - deg g_i) -> S^a and exact rank; independent of the fast path.
int graded_dim_linalg(const GradedIdeal& ideal, int a);

// Top nonzero degree of the Fermat Jacobian ring: nvars * (d - 2).
int socle_degree(int d, int nvars);

// Perfect-pairing test R^a x R^(t-a) -> R^t for the Fermat ring.
bool macaulay_check(int d, int nvars, int a);

// Degree-a slice of the quotient ring: ordered monomial representatives
// outside the ideal plus exact reduction onto them.
class QuotientPiece {
public:
    QuotientPiece(const GradedIdeal& ideal, int degree);

    const std::vector<Monomial>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int degree() const { return degree_; }

    // Coordinates of p modulo the ideal in the basis above; p must be
    // homogeneous of this degree (or zero).
    std::vector<Rational> reduce(const Polynomial& p) const;

private:
    int degree_;
    bool fast_path_;
    std::vector<Monomial> all_;                    // full monomial basis of S^degree
    std::map<Monomial, int> index_;                // monomial -> position in all_
    std::vector<Monomial> basis_;                  // representatives outside the ideal
    std::vector<int> basis_pos_;                   // positions of basis_ inside all_
    std::vector<std::vector<Rational>> rref_rows_; // reduced echelon rows of the ideal slice
    std::vector<int> rref_pivots_;
};

// Matrix of multiplication by a homogeneous q from R^a to R^(a + deg q),
// in the deterministic bases of QuotientPiece.
Matrix multiplication_map(const GradedIdeal& ideal, const Polynomial& q, int a);

// First (in lexicographic order) pair of monomials A of degree a and Q of
// degree d with A, Q, AQ all nonzero in the quotient ring; the exact witness
// that multiplication by Q is nonzero from degree a.  Monomial ideals only.
std::optional<std::pair<Monomial, Monomial>> torelli_witness(const GradedIdeal& ideal, int a, int d);

} // namespace monodromy
