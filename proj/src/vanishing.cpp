#include "monodromy/vanishing.hpp"

#include <numeric>
#include <stdexcept>

#include "monodromy/errors.hpp"

namespace monodromy {

namespace {

Cyclotomic bilinear(const Matrix& gram, const std::vector<Cyclotomic>& x,
                    const std::vector<Cyclotomic>& y) {
    Cyclotomic sum;
    for (int a = 0; a < gram.rows(); ++a) {
        if (x[static_cast<std::size_t>(a)].is_zero()) continue;
        for (int b = 0; b < gram.cols(); ++b)
            if (!gram.at(a, b).is_zero() && !y[static_cast<std::size_t>(b)].is_zero())
                sum += x[static_cast<std::size_t>(a)] * gram.at(a, b) * y[static_cast<std::size_t>(b)];
    }
    return sum;
}

bool is_root_of_unity(const Cyclotomic& x) {
    const long bound = std::lcm(2, x.order());
    return !x.is_zero() && x.pow(bound) == Cyclotomic(Rational(1));
}

} // namespace

std::vector<Cyclotomic> pl_transform(const std::vector<Cyclotomic>& x,
                                     const std::vector<Cyclotomic>& delta,
                                     const Matrix& bilinear_gram, int parity_sign) {
    if (parity_sign != 1 && parity_sign != -1)
        throw std::invalid_argument("parity_sign must be +1 (symmetric) or -1 (skew)");
    if (x.size() != delta.size() || static_cast<int>(x.size()) != bilinear_gram.rows())
        throw std::invalid_argument("vector lengths do not match the form");
    const Cyclotomic self = bilinear(bilinear_gram, delta, delta);
    Rational formula_sign;
    if (parity_sign > 0) {
        if (self == Cyclotomic(Rational(2))) formula_sign = -1;
        else if (self == Cyclotomic(Rational(-2))) formula_sign = 1;
        else throw BadVanishingCycle("even-parity vanishing cycle needs self-intersection +-2");
    } else {
        if (!self.is_zero()) throw BadVanishingCycle("odd-parity vanishing cycle needs self-intersection 0");
        formula_sign = -1;
    }
    const Cyclotomic pairing = bilinear(bilinear_gram, x, delta);
    std::vector<Cyclotomic> out = x;
    for (std::size_t a = 0; a < out.size(); ++a)
        out[a] += Cyclotomic(formula_sign) * pairing * delta[a];
    return out;
}

Matrix reflection_matrix(const ComplexReflection& r) {
    const int n = r.form.dim();
    if (static_cast<int>(r.delta.size()) != n)
        throw std::invalid_argument("reflection root length does not match the form");
    if (!r.form.is_hermitian()) throw std::invalid_argument("reflection form is not hermitian");
    if (r.epsilon != 1 && r.epsilon != -1) throw std::invalid_argument("epsilon must be +-1");
    if (r.lambda == Cyclotomic(Rational(1)) || !is_root_of_unity(r.lambda))
        throw std::invalid_argument("reflection eigenvalue must be a root of unity != 1");
    if (herm(r.form, r.delta, r.delta) != Cyclotomic(Rational(r.epsilon)))
        throw NonUnitConditioning("h(delta, delta) != epsilon");
    const Cyclotomic factor = Cyclotomic(Rational(r.epsilon)) * (r.lambda - Cyclotomic(Rational(1)));
    Matrix t = Matrix::identity(n);
    // column j of T is e_j + epsilon (lambda - 1) h(e_j, delta) delta
    for (int j = 0; j < n; ++j) {
        Cyclotomic hj;
        for (int b = 0; b < n; ++b)
            if (!r.form.gram.at(j, b).is_zero() && !r.delta[static_cast<std::size_t>(b)].is_zero())
                hj += r.form.gram.at(j, b) * r.delta[static_cast<std::size_t>(b)].conj();
        if (hj.is_zero()) continue;
        const Cyclotomic scale = factor * hj;
        for (int i = 0; i < n; ++i)
            if (!r.delta[static_cast<std::size_t>(i)].is_zero())
                t.at(i, j) += scale * r.delta[static_cast<std::size_t>(i)];
    }
    return t;
}

VanishingLattice a_lattice(int k) {
    if (k < 2) throw std::invalid_argument("a_lattice needs k >= 2");
    // root differences xi_a - xi_{a+1} as vectors in Z^k with (xi_a, xi_b) = delta_ab
    const int n = k - 1;
    std::vector<std::vector<Rational>> diff(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        diff[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(k), Rational(0));
        diff[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 1;
        diff[static_cast<std::size_t>(a)][static_cast<std::size_t>(a + 1)] = -1;
    }
    VanishingLattice lat;
    lat.dim = n;
    lat.parity = FormParity::Symmetric;
    lat.gram = Matrix(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Rational dot;
            for (int c = 0; c < k; ++c)
                dot += diff[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] *
                       diff[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
            if (dot != 0) lat.gram.at(a, b) = Cyclotomic(dot);
        }
    for (int a = 1; a <= n; ++a)
        lat.basis_labels.push_back("xi" + std::to_string(a) + "-xi" + std::to_string(a + 1));
    const Signature sig = hermitian_signature(hermitian_form(lat.gram));
    if (sig.positive != n || sig.negative != 0 || sig.radical != 0)
        throw InternalInconsistency("A-lattice gram is not positive definite");
    return lat;
}

Matrix monodromy_cycle_shift(int k) {
    if (k < 2) throw std::invalid_argument("monodromy_cycle_shift needs k >= 2");
    const int n = k - 1;
    Matrix t(n, n);
    // v_a = xi_a - xi_{a+1} maps to v_{a+1}; the last basis vector maps to
    // xi_k - xi_1 = -(v_1 + ... + v_{k-1}).
    for (int a = 0; a < n - 1; ++a) t.at(a + 1, a) = Cyclotomic(Rational(1));
    for (int i = 0; i < n; ++i) t.at(i, n - 1) = Cyclotomic(Rational(-1));
    return t;
}

VanishingLattice suspend_lattice(const VanishingLattice& v) {
    if (v.gram.rows() != v.dim || v.gram.cols() != v.dim)
        throw std::invalid_argument("lattice gram has the wrong shape");
    VanishingLattice out;
    out.dim = v.dim;
    out.gram = Matrix(v.dim, v.dim);
    for (const std::string& l : v.basis_labels) out.basis_labels.push_back("s*" + l);
    if (v.parity == FormParity::Symmetric) {
        if (v.gram != v.gram.transpose()) throw NotSymmetric("suspension input gram is not symmetric");
        out.parity = FormParity::Skew;
        std::vector<Rational> diag;
        for (int i = 0; i < v.dim; ++i) {
            const Cyclotomic& d = v.gram.at(i, i);
            if (!d.is_rational()) throw std::invalid_argument("lattice gram must be rational");
            diag.push_back(d.rational_value());
        }
        out.suspended_diagonal = std::move(diag);
        for (int i = 0; i < v.dim; ++i)
            for (int j = i + 1; j < v.dim; ++j) {
                out.gram.at(i, j) = -v.gram.at(i, j);
                out.gram.at(j, i) = v.gram.at(i, j);
            }
        return out;
    }
    // Skew input: only lattices produced by a suspension know the diagonal
    // that a further suspension must restore (negated).
    if (!v.suspended_diagonal)
        throw NotSymmetric("cannot suspend a skew lattice of unknown provenance");
    out.parity = FormParity::Symmetric;
    for (int i = 0; i < v.dim; ++i) {
        const Rational& d = (*v.suspended_diagonal)[static_cast<std::size_t>(i)];
        if (d != 0) out.gram.at(i, i) = Cyclotomic(-d);
    }
    for (int i = 0; i < v.dim; ++i)
        for (int j = i + 1; j < v.dim; ++j) {
            out.gram.at(i, j) = v.gram.at(i, j);
            out.gram.at(j, i) = v.gram.at(i, j);
        }
    return out;
}

Matrix join_monodromy(const Matrix& tf, const Matrix& tg) { return kronecker_product(tf, tg); }

NodalMonodromy nodal_monodromy(int k, int n) {
    if (k < 2 || n < 0) throw std::invalid_argument("nodal_monodromy needs k >= 2, n >= 0");
    const int sign = (n % 2 == 0) ? -1 : 1; // (-1)^(n+1)
    const Matrix shift = monodromy_cycle_shift(k);
    NodalMonodromy nm;
    nm.matrix = (sign > 0) ? shift : -shift;
    const auto ord = multiplicative_order(nm.matrix, 2 * k);
    if (!ord) throw InternalInconsistency("nodal monodromy order exceeds 2k");
    nm.order = *ord;
    // The n+1 suspensions of the A_{k-1} lattice carry the hermitian form
    // h(x, y) = i^(n+1) (x, conj y) used to normalize eigenvectors.
    VanishingLattice lat = a_lattice(k);
    for (int s = 0; s < n + 1; ++s) lat = suspend_lattice(lat);
    const Cyclotomic phase = Cyclotomic::root_of_unity(4, n + 1);
    for (int i = 1; i <= k - 1; ++i) {
        NodalEigenpair pair;
        pair.lambda = Cyclotomic(Rational(sign)) * Cyclotomic::root_of_unity(k, i);
        const int order = pair.lambda.order();
        Matrix m = nm.matrix.embedded(order);
        for (int a = 0; a < m.rows(); ++a) m.at(a, a) -= pair.lambda;
        auto kernel = kernel_basis(m);
        if (kernel.size() != 1)
            throw InternalInconsistency("nodal monodromy eigenspace is not one-dimensional");
        pair.vector = std::move(kernel[0]);
        Cyclotomic h;
        for (int a = 0; a < lat.gram.rows(); ++a)
            for (int b = 0; b < lat.gram.cols(); ++b)
                if (!lat.gram.at(a, b).is_zero())
                    h += pair.vector[static_cast<std::size_t>(a)] * lat.gram.at(a, b) *
                         pair.vector[static_cast<std::size_t>(b)].conj();
        pair.h_value = phase * h;
        if (pair.h_value.is_rational() && pair.h_value.rational_value() != 0) {
            // scale v by 1/sqrt(|h|) when that square root is rational
            const Rational hv = pair.h_value.rational_value();
            const Rational target = hv > 0 ? 1 / hv : -1 / hv;
            if (mpz_perfect_square_p(target.get_num().get_mpz_t()) &&
                mpz_perfect_square_p(target.get_den().get_mpz_t())) {
                mpz_class num_root, den_root;
                mpz_sqrt(num_root.get_mpz_t(), target.get_num().get_mpz_t());
                mpz_sqrt(den_root.get_mpz_t(), target.get_den().get_mpz_t());
                const Cyclotomic scale{Rational(num_root) / Rational(den_root)};
                for (auto& c : pair.vector) c = scale * c;
                pair.epsilon = hv > 0 ? 1 : -1;
                pair.h_value = Cyclotomic(Rational(pair.epsilon.value()));
            }
        }
        nm.eigenpairs.push_back(std::move(pair));
    }
    return nm;
}

bool reflection_conjugation_check(const Matrix& kappa, const ComplexReflection& r) {
    if (!preserves_hermitian_form(kappa, r.form.gram))
        throw NotUnitary("kappa does not preserve the hermitian form");
    const Matrix s = reflection_matrix(r);
    const Matrix kappa_inv = inverse(kappa);
    ComplexReflection moved = r;
    moved.delta = apply(kappa_inv, r.delta);
    return kappa_inv * s * kappa == reflection_matrix(moved);
}

} // namespace monodromy
