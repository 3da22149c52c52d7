// Exact dense matrices over Z and Q. Vectors are rows throughout; a lattice
// basis is a row matrix, and an isometry A satisfies A * G * A^T = G.
#pragma once

#include "latk/int.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace latk {

struct ZMat {
    int m = 0, n = 0;
    std::vector<Int> a;

    ZMat() = default;
    ZMat(int rows, int cols) : m(rows), n(cols), a(static_cast<size_t>(rows) * cols) {}
    ZMat(std::initializer_list<std::initializer_list<long>> rows);

    Int& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Int& operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    static ZMat identity(int k);
    static ZMat zero(int rows, int cols) { return ZMat(rows, cols); }

    bool operator==(const ZMat& o) const { return m == o.m && n == o.n && a == o.a; }

    ZMat transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;
    void swap_rows(int i, int j);
    void negate_row(int i);
    // row[i] += c * row[j]
    void addmul_row(int i, int j, const Int& c);
    ZMat row(int i) const;
    std::vector<Int> row_vec(int i) const;
    void set_row(int i, const std::vector<Int>& v);
    ZMat vstack(const ZMat& below) const;
    ZMat submatrix_rows(const std::vector<int>& rows) const;
    std::string str() const;
};

ZMat operator*(const ZMat& A, const ZMat& B);
ZMat operator+(const ZMat& A, const ZMat& B);
ZMat operator-(const ZMat& A, const ZMat& B);
ZMat operator*(const Int& c, const ZMat& A);

std::vector<Int> operator*(const std::vector<Int>& x, const ZMat& A);
Int dot(const std::vector<Int>& x, const ZMat& G, const std::vector<Int>& y);

struct QMat {
    int m = 0, n = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(int rows, int cols) : m(rows), n(cols), a(static_cast<size_t>(rows) * cols) {}
    explicit QMat(const ZMat& z);

    Rat& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Rat& operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    static QMat identity(int k);
    QMat transpose() const;
    bool operator==(const QMat& o) const { return m == o.m && n == o.n && a == o.a; }

    // true + Z-matrix if every entry is integral
    bool to_integral(ZMat& out) const;
    std::string str() const;
};

QMat operator*(const QMat& A, const QMat& B);
QMat operator+(const QMat& A, const QMat& B);
QMat operator-(const QMat& A, const QMat& B);
QMat operator*(const Rat& c, const QMat& A);
std::vector<Rat> operator*(const std::vector<Rat>& x, const QMat& A);

Int det(const ZMat& A);                 // Bareiss, A square
QMat inverse(const ZMat& A);            // A square, det != 0
QMat inverse(const QMat& A);
int rank_of(const ZMat& A);

// Row-style Hermite normal form: returns H with rowspace(H) = rowspace(A),
// rank rows, pivots positive, entries above each pivot reduced into
// [0, pivot). If U is non-null it gets a unimodular m x m matrix with
// (U*A) = H padded with zero rows.
ZMat hnf(const ZMat& A, ZMat* U = nullptr);

// Smith normal form: computes unimodular U (m x m), V (n x n) with
// U*A*V = D diagonal, d_i >= 0, d_i | d_{i+1}. Returns D.
ZMat snf(const ZMat& A, ZMat& U, ZMat& V);

// Basis of {x in Z^m : x*A = 0}, saturated (primitive kernel).
ZMat kernel_z(const ZMat& A);

// Particular rational solution of x*A = b; throws if none exists.
std::vector<Rat> solve_left(const ZMat& A, const std::vector<Rat>& b);

// Particular integer solution of x*A = b; false if none exists.
bool solve_left_z(const ZMat& A, const std::vector<Int>& b, std::vector<Int>& out);

// (pos, neg, zero) inertia of a symmetric rational matrix, exact.
struct Inertia {
    int pos = 0, neg = 0, zero = 0;

    bool operator==(const Inertia& o) const = default;
};
Inertia inertia(const QMat& S);

}  // namespace latk
