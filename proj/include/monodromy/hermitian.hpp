#pragma once

#include <vector>

#include "monodromy/matrix.hpp"

namespace monodromy {

// Hermitian form h(x, y) = x^T * gram * conj(y): linear in x, conjugate-linear
// in y, gram equal to its conjugate transpose.
struct HermitianForm {
    Matrix gram;

    int dim() const { return gram.rows(); }
    bool is_hermitian() const { return gram == gram.conj_transpose(); }
};

HermitianForm hermitian_form(Matrix gram); // validates shape and hermitian symmetry

Cyclotomic herm(const HermitianForm& h, const std::vector<Cyclotomic>& x,
                const std::vector<Cyclotomic>& y);

struct Signature {
    int positive = 0;
    int negative = 0;
    int radical = 0; // dimension of the kernel; 0 iff nondegenerate
};

// Exact congruence diagonalization: rational-pivot steps with sign
// determination by interval refinement, hyperbolic two-by-two splitting
// (contributing one positive and one negative) when the diagonal is zero.
// Never touches floating-point eigensolvers.
Signature hermitian_signature(const HermitianForm& h);

// h(Ux, Uy) = h(x, y) for all x, y; exact.
bool preserves_hermitian_form(const Matrix& u, const Matrix& gram);

} // namespace monodromy
