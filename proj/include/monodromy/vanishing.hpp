#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monodromy/hermitian.hpp"
#include "monodromy/matrix.hpp"

namespace monodromy {

// One unitary (complex) reflection: T(x) = x + epsilon*(lambda - 1)*h(x, delta)*delta,
// with h(delta, delta) = epsilon = +-1 and lambda a root of unity != 1.
struct ComplexReflection {
    Cyclotomic lambda;
    std::vector<Cyclotomic> delta;
    int epsilon = 1;
    HermitianForm form;
};

enum class FormParity { Symmetric, Skew };

// Integer intersection lattice of vanishing cycles.  Skew lattices produced
// by suspend_lattice remember the suppressed diagonal so that a second
// suspension can restore its negative (double suspension = negation).
struct VanishingLattice {
    int dim = 0;
    Matrix gram;
    FormParity parity = FormParity::Symmetric;
    std::vector<std::string> basis_labels;
    std::optional<std::vector<Rational>> suspended_diagonal;
};

// Picard-Lefschetz transform of x against the vanishing cycle delta.
// parity_sign +1: symmetric intersection form, (delta,delta) = +-2, formula
// sign opposite to it; parity_sign -1: skew form, (delta,delta) = 0, sign -.
std::vector<Cyclotomic> pl_transform(const std::vector<Cyclotomic>& x,
                                     const std::vector<Cyclotomic>& delta,
                                     const Matrix& bilinear_gram, int parity_sign);

Matrix reflection_matrix(const ComplexReflection& r);

// A_{k-1} lattice of y^k = t in the basis of successive root differences,
// computed from (xi_a, xi_b) = delta_ab; positive definite.
VanishingLattice a_lattice(int k);

// Index-shift monodromy of y^k = t in the same basis; order exactly k with
// eigenvalues the nontrivial k-th roots of unity.
Matrix monodromy_cycle_shift(int k);

// Adds one square to the singularity: zero the diagonal, flip the sign above
// it, and complete below the diagonal by the target parity.
VanishingLattice suspend_lattice(const VanishingLattice& v);

// Monodromy of a sum of singularities is the tensor product of the factors'.
Matrix join_monodromy(const Matrix& tf, const Matrix& tg);

struct NodalEigenpair {
    Cyclotomic lambda;
    std::vector<Cyclotomic> vector;
    std::optional<int> epsilon; // set when the eigenvector scaled to h = +-1
    Cyclotomic h_value;         // h(v, v) for the returned (possibly unscaled) vector
};

struct NodalMonodromy {
    Matrix matrix;
    int order = 0;
    std::vector<NodalEigenpair> eigenpairs; // lambda_i = (-1)^(n+1) zeta_k^i, i = 1..k-1
};

// Local monodromy of y^k + x_1^2 + ... + x_{n+1}^2 = t on its vanishing
// lattice: (-1)^(n+1) times the cycle shift, with exact eigen-decomposition.
NodalMonodromy nodal_monodromy(int k, int n);

// kappa^{-1} s_delta kappa = s_{kappa^{-1} delta}, exactly; kappa must be
// unitary for the reflection's form.
bool reflection_conjugation_check(const Matrix& kappa, const ComplexReflection& r);

} // namespace monodromy
