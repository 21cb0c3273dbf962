#include "monodromy/matrix.hpp"

#include <numeric>
#include <stdexcept>

#include "monodromy/elimination.hpp"

namespace monodromy {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(Rational(1));
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

Matrix Matrix::from_rational_rows(const std::vector<std::vector<Rational>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = Cyclotomic(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
}

Matrix Matrix::from_int_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> q;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (long v : row) r.emplace_back(v);
        q.push_back(std::move(r));
    }
    return from_rational_rows(q);
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::conjugate() const {
    Matrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).conj();
    return m;
}

Matrix Matrix::conj_transpose() const { return conjugate().transpose(); }

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

int Matrix::common_order() const {
    int m = 1;
    for (const auto& x : e_) m = std::lcm(m, x.order());
    return m;
}

Matrix Matrix::embedded(int order) const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i].embedded(order);
    return m;
}

std::string Matrix::canonical_key(int order) const {
    if (order == 0) order = common_order();
    std::string key = std::to_string(rows_) + "x" + std::to_string(cols_) + "@";
    for (const auto& x : e_) {
        key += x.embedded(order).canonical_key();
        key += ';';
    }
    return key;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Cyclotomic& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero()) m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

Matrix operator*(const Cyclotomic& s, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = s * a.e_[i];
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] != b.e_[i]) return false;
    return true;
}

std::vector<Cyclotomic> apply(const Matrix& m, const std::vector<Cyclotomic>& x) {
    if (static_cast<int>(x.size()) != m.cols()) throw std::invalid_argument("vector length mismatch");
    std::vector<Cyclotomic> y(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !x[static_cast<std::size_t>(j)].is_zero())
                y[static_cast<std::size_t>(i)] += m.at(i, j) * x[static_cast<std::size_t>(j)];
    return y;
}

Matrix kronecker_product(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    if (!b.at(p, q).is_zero())
                        m.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
        }
    return m;
}

namespace {

std::vector<std::vector<Cyclotomic>> to_row_vectors(const Matrix& m) {
    std::vector<std::vector<Cyclotomic>> rows(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        rows[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(m.at(i, j));
    }
    return rows;
}

} // namespace

int exact_rank(const Matrix& m) {
    auto rows = to_row_vectors(m);
    return detail::echelon_rank(rows);
}

Cyclotomic determinant(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    auto rows = to_row_vectors(m);
    const int n = m.rows();
    Cyclotomic det(Rational(1));
    int swaps = 0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return Cyclotomic(Rational(0));
        if (piv != col) {
            std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(col)]);
            ++swaps;
        }
        const auto& prow = rows[static_cast<std::size_t>(col)];
        const Cyclotomic& p = prow[static_cast<std::size_t>(col)];
        det *= p;
        for (int r = col + 1; r < n; ++r) {
            auto& row = rows[static_cast<std::size_t>(r)];
            if (row[static_cast<std::size_t>(col)].is_zero()) continue;
            Cyclotomic f = row[static_cast<std::size_t>(col)] / p;
            for (int c = col; c < n; ++c)
                if (!prow[static_cast<std::size_t>(c)].is_zero())
                    row[static_cast<std::size_t>(c)] -= f * prow[static_cast<std::size_t>(c)];
        }
    }
    if (swaps % 2 == 1) det = -det;
    return det;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const int n = m.rows();
    // Gauss-Jordan on [m | I]
    std::vector<std::vector<Cyclotomic>> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(2 * n));
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = m.at(i, j);
        row[static_cast<std::size_t>(n + i)] = Cyclotomic(Rational(1));
    }
    auto pivots = detail::reduced_echelon(rows);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) {
        // pivots must be exactly the first n columns
        for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
            if (pivots[static_cast<std::size_t>(i)] != i) throw std::domain_error("matrix is singular");
        if (static_cast<int>(pivots.size()) != n) throw std::domain_error("matrix is singular");
    }
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
    return inv;
}

std::vector<std::vector<Cyclotomic>> kernel_basis(const Matrix& m) {
    auto rows = to_row_vectors(m);
    auto pivots = detail::reduced_echelon(rows);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<Cyclotomic>> basis;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        std::vector<Cyclotomic> v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(free_col)] = Cyclotomic(Rational(1));
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -rows[r][static_cast<std::size_t>(free_col)];
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix matrix_power(const Matrix& m, long e) {
    if (!m.is_square()) throw std::invalid_argument("power of a non-square matrix");
    if (e < 0) return matrix_power(inverse(m), -e);
    Matrix result = Matrix::identity(m.rows());
    Matrix base = m;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::optional<int> multiplicative_order(const Matrix& m, int cap) {
    if (!m.is_square()) throw std::invalid_argument("order of a non-square matrix");
    const Matrix id = Matrix::identity(m.rows());
    Matrix p = m;
    for (int e = 1; e <= cap; ++e) {
        if (p == id) return e;
        p = p * m;
    }
    return std::nullopt;
}

} // namespace monodromy
