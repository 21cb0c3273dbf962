#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "monodromy/cyclotomic.hpp"

namespace monodromy {

// Dense matrix over cyclotomic scalars (rationals embed as order 1).
// Entries of mixed orders are fine; scalar arithmetic embeds on demand.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows);
    static Matrix from_rational_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix from_int_rows(std::initializer_list<std::initializer_list<long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Cyclotomic& at(int i, int j) { return e_[idx(i, j)]; }
    const Cyclotomic& at(int i, int j) const { return e_[idx(i, j)]; }

    Matrix transpose() const;
    Matrix conjugate() const;
    Matrix conj_transpose() const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    // lcm of the entry orders; every entry embeds into Q(zeta_of_that).
    int common_order() const;
    Matrix embedded(int order) const;

    // Canonical-form key after embedding all entries into the common order
    // given (defaults to common_order()).  Equal matrices at equal orders
    // produce equal keys; used for exact dedup in group enumeration.
    std::string canonical_key(int order = 0) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Cyclotomic& s, const Matrix& a);
    Matrix operator-() const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }
    int rows_, cols_;
    std::vector<Cyclotomic> e_;
};

std::vector<Cyclotomic> apply(const Matrix& m, const std::vector<Cyclotomic>& x);

Matrix kronecker_product(const Matrix& a, const Matrix& b);

// Rank over the cyclotomic field containing the entries (exact elimination).
int exact_rank(const Matrix& m);

Cyclotomic determinant(const Matrix& m);

// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

// Basis of the right kernel, deterministic (free columns in order).
std::vector<std::vector<Cyclotomic>> kernel_basis(const Matrix& m);

Matrix matrix_power(const Matrix& m, long e);

// Smallest e in [1, cap] with m^e = identity, or nullopt.
std::optional<int> multiplicative_order(const Matrix& m, int cap);

} // namespace monodromy
