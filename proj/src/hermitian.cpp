#include "monodromy/hermitian.hpp"

#include <stdexcept>

#include "monodromy/errors.hpp"

namespace monodromy {

HermitianForm hermitian_form(Matrix gram) {
    if (!gram.is_square()) throw std::invalid_argument("hermitian gram must be square");
    HermitianForm h{std::move(gram)};
    if (!h.is_hermitian()) throw std::invalid_argument("gram is not equal to its conjugate transpose");
    return h;
}

Cyclotomic herm(const HermitianForm& h, const std::vector<Cyclotomic>& x,
                const std::vector<Cyclotomic>& y) {
    const int n = h.dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw std::invalid_argument("vector length does not match form dimension");
    Cyclotomic sum;
    for (int a = 0; a < n; ++a) {
        if (x[static_cast<std::size_t>(a)].is_zero()) continue;
        for (int b = 0; b < n; ++b) {
            const Cyclotomic& g = h.gram.at(a, b);
            if (g.is_zero() || y[static_cast<std::size_t>(b)].is_zero()) continue;
            sum += x[static_cast<std::size_t>(a)] * g * y[static_cast<std::size_t>(b)].conj();
        }
    }
    return sum;
}

Signature hermitian_signature(const HermitianForm& h) {
    if (!h.is_hermitian()) throw std::invalid_argument("signature of a non-hermitian form");
    // Work on a shrinking copy; each step splits off diagonal entries by
    // congruence.  Diagonal entries of a hermitian matrix are real.
    std::vector<std::vector<Cyclotomic>> g(static_cast<std::size_t>(h.dim()));
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < h.dim(); ++j) g[static_cast<std::size_t>(i)].push_back(h.gram.at(i, j));

    Signature sig;
    while (!g.empty()) {
        const std::size_t n = g.size();
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!g[i][i].is_zero()) {
                piv = i;
                break;
            }
        if (piv < n) {
            const int s = sign_real_cyclotomic(g[piv][piv]);
            if (s > 0) ++sig.positive;
            else ++sig.negative;
            std::vector<std::vector<Cyclotomic>> next;
            next.reserve(n - 1);
            for (std::size_t a = 0; a < n; ++a) {
                if (a == piv) continue;
                std::vector<Cyclotomic> row;
                row.reserve(n - 1);
                for (std::size_t b = 0; b < n; ++b) {
                    if (b == piv) continue;
                    row.push_back(g[a][b] - g[a][piv] * g[piv][b] / g[piv][piv]);
                }
                next.push_back(std::move(row));
            }
            g = std::move(next);
            continue;
        }
        // all-zero diagonal: hyperbolic pair if any off-diagonal entry survives
        std::size_t hi = n, hj = n;
        for (std::size_t i = 0; i < n && hi == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!g[i][j].is_zero()) {
                    hi = i;
                    hj = j;
                    break;
                }
        if (hi == n) {
            sig.radical += static_cast<int>(n);
            break;
        }
        ++sig.positive;
        ++sig.negative;
        // Schur complement against the invertible block [[0, a], [conj(a), 0]]
        const Cyclotomic a = g[hi][hj];
        const Cyclotomic inv_a = a.inverse();
        const Cyclotomic inv_ca = a.conj().inverse();
        std::vector<std::vector<Cyclotomic>> next;
        next.reserve(n - 2);
        for (std::size_t m = 0; m < n; ++m) {
            if (m == hi || m == hj) continue;
            std::vector<Cyclotomic> row;
            row.reserve(n - 2);
            for (std::size_t l = 0; l < n; ++l) {
                if (l == hi || l == hj) continue;
                row.push_back(g[m][l] - g[m][hj] * inv_a * g[hi][l] - g[m][hi] * inv_ca * g[hj][l]);
            }
            next.push_back(std::move(row));
        }
        g = std::move(next);
    }
    return sig;
}

bool preserves_hermitian_form(const Matrix& u, const Matrix& gram) {
    if (!u.is_square() || u.rows() != gram.rows()) return false;
    return u.transpose() * gram * u.conjugate() == gram;
}

} // namespace monodromy
