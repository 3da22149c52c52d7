#include "latk/mat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace latk {

ZMat::ZMat(std::initializer_list<std::initializer_list<long>> rows) {
    m = static_cast<int>(rows.size());
    n = m ? static_cast<int>(rows.begin()->size()) : 0;
    a.resize(static_cast<size_t>(m) * n);
    int i = 0;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("ragged initializer");
        int j = 0;
        for (long v : r) (*this)(i, j++) = v;
        ++i;
    }
}

ZMat ZMat::identity(int k) {
    ZMat I(k, k);
    for (int i = 0; i < k; ++i) I(i, i) = 1;
    return I;
}

ZMat ZMat::transpose() const {
    ZMat T(n, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) T(j, i) = (*this)(i, j);
    return T;
}

bool ZMat::is_symmetric() const {
    if (m != n) return false;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool ZMat::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

void ZMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < n; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void ZMat::negate_row(int i) {
    for (int k = 0; k < n; ++k) (*this)(i, k) = -(*this)(i, k);
}

void ZMat::addmul_row(int i, int j, const Int& c) {
    if (c == 0) return;
    for (int k = 0; k < n; ++k) (*this)(i, k) += c * (*this)(j, k);
}

ZMat ZMat::row(int i) const {
    ZMat r(1, n);
    for (int k = 0; k < n; ++k) r(0, k) = (*this)(i, k);
    return r;
}

std::vector<Int> ZMat::row_vec(int i) const {
    std::vector<Int> r(n);
    for (int k = 0; k < n; ++k) r[k] = (*this)(i, k);
    return r;
}

void ZMat::set_row(int i, const std::vector<Int>& v) {
    for (int k = 0; k < n; ++k) (*this)(i, k) = v[k];
}

ZMat ZMat::vstack(const ZMat& below) const {
    if (m == 0) return below;
    if (below.m == 0) return *this;
    if (n != below.n) throw std::invalid_argument("vstack: width mismatch");
    ZMat R(m + below.m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) R(i, j) = (*this)(i, j);
    for (int i = 0; i < below.m; ++i)
        for (int j = 0; j < n; ++j) R(m + i, j) = below(i, j);
    return R;
}

ZMat ZMat::submatrix_rows(const std::vector<int>& rows) const {
    ZMat R(static_cast<int>(rows.size()), n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) R(static_cast<int>(i), j) = (*this)(rows[i], j);
    return R;
}

std::string ZMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < n; ++j) os << (*this)(i, j).get_str() << (j + 1 < n ? ", " : "");
        os << "]" << (i + 1 < m ? ",\n" : "");
    }
    os << "]";
    return os.str();
}

ZMat operator*(const ZMat& A, const ZMat& B) {
    if (A.n != B.m) throw std::invalid_argument("matmul: shape mismatch");
    ZMat C(A.m, B.n);
    for (int i = 0; i < A.m; ++i)
        for (int k = 0; k < A.n; ++k) {
            const Int& aik = A(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.n; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

ZMat operator+(const ZMat& A, const ZMat& B) {
    ZMat C(A.m, A.n);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] + B.a[i];
    return C;
}

ZMat operator-(const ZMat& A, const ZMat& B) {
    ZMat C(A.m, A.n);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] - B.a[i];
    return C;
}

ZMat operator*(const Int& c, const ZMat& A) {
    ZMat C(A.m, A.n);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = c * A.a[i];
    return C;
}

std::vector<Int> operator*(const std::vector<Int>& x, const ZMat& A) {
    if (static_cast<int>(x.size()) != A.m) throw std::invalid_argument("vecmul: shape mismatch");
    std::vector<Int> y(A.n);
    for (int i = 0; i < A.m; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < A.n; ++j) y[j] += x[i] * A(i, j);
    }
    return y;
}

Int dot(const std::vector<Int>& x, const ZMat& G, const std::vector<Int>& y) {
    std::vector<Int> t = x * G;
    Int s = 0;
    for (size_t i = 0; i < t.size(); ++i) s += t[i] * y[i];
    return s;
}

QMat::QMat(const ZMat& z) : m(z.m), n(z.n), a(z.a.size()) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = Rat(z.a[i]);
}

QMat QMat::identity(int k) {
    QMat I(k, k);
    for (int i = 0; i < k; ++i) I(i, i) = 1;
    return I;
}

QMat QMat::transpose() const {
    QMat T(n, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) T(j, i) = (*this)(i, j);
    return T;
}

bool QMat::to_integral(ZMat& out) const {
    out = ZMat(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& x = (*this)(i, j);
            if (x.get_den() != 1) return false;
            out(i, j) = x.get_num();
        }
    return true;
}

std::string QMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < n; ++j) os << rat_str((*this)(i, j)) << (j + 1 < n ? ", " : "");
        os << "]" << (i + 1 < m ? ",\n" : "");
    }
    os << "]";
    return os.str();
}

QMat operator*(const QMat& A, const QMat& B) {
    if (A.n != B.m) throw std::invalid_argument("matmul: shape mismatch");
    QMat C(A.m, B.n);
    for (int i = 0; i < A.m; ++i)
        for (int k = 0; k < A.n; ++k) {
            const Rat& aik = A(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.n; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

QMat operator+(const QMat& A, const QMat& B) {
    QMat C(A.m, A.n);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] + B.a[i];
    return C;
}

QMat operator-(const QMat& A, const QMat& B) {
    QMat C(A.m, A.n);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] - B.a[i];
    return C;
}

QMat operator*(const Rat& c, const QMat& A) {
    QMat C(A.m, A.n);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = c * A.a[i];
    return C;
}

std::vector<Rat> operator*(const std::vector<Rat>& x, const QMat& A) {
    if (static_cast<int>(x.size()) != A.m) throw std::invalid_argument("vecmul: shape mismatch");
    std::vector<Rat> y(A.n);
    for (int i = 0; i < A.m; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < A.n; ++j) y[j] += x[i] * A(i, j);
    }
    return y;
}

Int det(const ZMat& A) {
    if (A.m != A.n) throw std::invalid_argument("det: not square");
    int n = A.n;
    if (n == 0) return 1;
    ZMat B = A;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (B(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (B(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            B.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                B(i, j) = B(k, k) * B(i, j) - B(i, k) * B(k, j);
                mpz_divexact(B(i, j).get_mpz_t(), B(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = B(k, k);
    }
    return sign > 0 ? B(n - 1, n - 1) : -B(n - 1, n - 1);
}

QMat inverse(const QMat& A) {
    if (A.m != A.n) throw std::invalid_argument("inverse: not square");
    int n = A.n;
    QMat B = A, I = QMat::identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (B(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("inverse: singular matrix");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(B(piv, j), B(k, j));
                std::swap(I(piv, j), I(k, j));
            }
        Rat d = B(k, k);
        for (int j = 0; j < n; ++j) {
            B(k, j) /= d;
            I(k, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || B(i, k) == 0) continue;
            Rat c = B(i, k);
            for (int j = 0; j < n; ++j) {
                B(i, j) -= c * B(k, j);
                I(i, j) -= c * I(k, j);
            }
        }
    }
    return I;
}

QMat inverse(const ZMat& A) { return inverse(QMat(A)); }

int rank_of(const ZMat& A) {
    QMat B(A);
    int r = 0;
    for (int col = 0; col < B.n && r < B.m; ++col) {
        int piv = -1;
        for (int i = r; i < B.m; ++i)
            if (B(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < B.n; ++j) std::swap(B(piv, j), B(r, j));
        for (int i = r + 1; i < B.m; ++i) {
            if (B(i, col) == 0) continue;
            Rat c = B(i, col) / B(r, col);
            for (int j = col; j < B.n; ++j) B(i, j) -= c * B(r, j);
        }
        ++r;
    }
    return r;
}

ZMat hnf(const ZMat& A, ZMat* U) {
    ZMat H = A;
    ZMat T = ZMat::identity(A.m);
    int row = 0;
    for (int col = 0; col < H.n && row < H.m; ++col) {
        // pick pivot row with minimal nonzero |entry| in this column
        for (;;) {
            int piv = -1;
            for (int i = row; i < H.m; ++i) {
                if (H(i, col) == 0) continue;
                if (piv < 0 || mpz_cmpabs(H(i, col).get_mpz_t(), H(piv, col).get_mpz_t()) < 0) piv = i;
            }
            if (piv < 0) break;
            H.swap_rows(row, piv);
            T.swap_rows(row, piv);
            bool cleared = true;
            for (int i = row + 1; i < H.m; ++i) {
                if (H(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), H(i, col).get_mpz_t(), H(row, col).get_mpz_t());
                H.addmul_row(i, row, -q);
                T.addmul_row(i, row, -q);
                if (H(i, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (H(row, col) == 0) continue;
        if (H(row, col) < 0) {
            H.negate_row(row);
            T.negate_row(row);
        }
        for (int i = 0; i < row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), H(i, col).get_mpz_t(), H(row, col).get_mpz_t());
            H.addmul_row(i, row, -q);
            T.addmul_row(i, row, -q);
        }
        ++row;
    }
    if (U) *U = T;
    ZMat out(row, H.n);
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < H.n; ++j) out(i, j) = H(i, j);
    if (U) return out;  // caller pairs out with full U
    return out;
}

namespace {
int cmpabs_int(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
}  // namespace

ZMat snf(const ZMat& A, ZMat& U, ZMat& V) {
    ZMat D = A;
    U = ZMat::identity(A.m);
    V = ZMat::identity(A.n);
    int r = std::min(A.m, A.n);
    auto addmul_col = [&](ZMat& M, int j, int k, const Int& c) {
        if (c == 0) return;
        for (int i = 0; i < M.m; ++i) M(i, j) += c * M(i, k);
    };
    auto swap_cols = [&](ZMat& M, int j, int k) {
        if (j == k) return;
        for (int i = 0; i < M.m; ++i) std::swap(M(i, j), M(i, k));
    };
    for (int t = 0; t < r; ++t) {
        // locate minimal-|.| nonzero entry in trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < D.m; ++i)
            for (int j = t; j < D.n; ++j) {
                if (D(i, j) == 0) continue;
                if (pi < 0 || cmpabs_int(D(i, j), D(pi, pj)) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        D.swap_rows(t, pi);
        U.swap_rows(t, pi);
        swap_cols(D, t, pj);
        swap_cols(V, t, pj);
        for (;;) {
            bool again = false;
            for (int i = t + 1; i < D.m; ++i) {
                if (D(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                D.addmul_row(i, t, -q);
                U.addmul_row(i, t, -q);
                if (D(i, t) != 0) {
                    D.swap_rows(t, i);
                    U.swap_rows(t, i);
                    again = true;
                }
            }
            for (int j = t + 1; j < D.n; ++j) {
                if (D(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                addmul_col(D, j, t, -q);
                addmul_col(V, j, t, -q);
                if (D(t, j) != 0) {
                    swap_cols(D, t, j);
                    swap_cols(V, t, j);
                    again = true;
                }
            }
            if (!again) break;
        }
        // ensure divisibility of the trailing block by the pivot
        bool redo = false;
        for (int i = t + 1; i < D.m && !redo; ++i)
            for (int j = t + 1; j < D.n && !redo; ++j) {
                Int rmod = mod_floor(D(i, j), abs(D(t, t)));
                if (rmod != 0) {
                    D.addmul_row(t, i, 1);
                    U.addmul_row(t, i, 1);
                    redo = true;
                }
            }
        if (redo) {
            --t;
            continue;
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    return D;
}

ZMat kernel_z(const ZMat& A) {
    ZMat U, V;
    ZMat D = snf(A, U, V);
    int r = 0;
    int d = std::min(A.m, A.n);
    for (int i = 0; i < d; ++i)
        if (D(i, i) != 0) ++r;
    ZMat K(A.m - r, A.m);
    for (int i = r; i < A.m; ++i)
        for (int j = 0; j < A.m; ++j) K(i - r, j) = U(i, j);
    return K;
}

std::vector<Rat> solve_left(const ZMat& A, const std::vector<Rat>& b) {
    // x * A = b  <=>  A^T x^T = b^T; Gaussian elimination over Q.
    QMat M(A.n, A.m + 1);
    for (int i = 0; i < A.n; ++i) {
        for (int j = 0; j < A.m; ++j) M(i, j) = Rat(A(j, i));
        M(i, A.m) = b[static_cast<size_t>(i)];
    }
    int row = 0;
    std::vector<int> pivcol(A.n, -1);
    for (int col = 0; col < A.m && row < M.m; ++col) {
        int piv = -1;
        for (int i = row; i < M.m; ++i)
            if (M(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j <= A.m; ++j) std::swap(M(piv, j), M(row, j));
        Rat d = M(row, col);
        for (int j = col; j <= A.m; ++j) M(row, j) /= d;
        for (int i = 0; i < M.m; ++i) {
            if (i == row || M(i, col) == 0) continue;
            Rat c = M(i, col);
            for (int j = col; j <= A.m; ++j) M(i, j) -= c * M(row, j);
        }
        pivcol[row] = col;
        ++row;
    }
    for (int i = row; i < M.m; ++i)
        if (M(i, A.m) != 0) throw std::domain_error("solve_left: inconsistent system");
    std::vector<Rat> x(A.m, Rat(0));
    for (int i = 0; i < row; ++i) x[pivcol[i]] = M(i, A.m);
    return x;
}

Inertia inertia(const QMat& S) {
    if (S.m != S.n) throw std::invalid_argument("inertia: not square");
    QMat B = S;
    int n = S.n;
    Inertia out;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        // prefer a nonzero diagonal pivot among unprocessed indices
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && B(i, i) != 0) {
                p = i;
                break;
            }
        if (p < 0) {
            // look for off-diagonal entry; fold it onto the diagonal
            int pi = -1, pj = -1;
            for (int i = 0; i < n && pi < 0; ++i) {
                if (done[i]) continue;
                for (int j = 0; j < n; ++j) {
                    if (done[j] || j == i) continue;
                    if (B(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
                }
            }
            if (pi < 0) {
                for (int i = 0; i < n; ++i)
                    if (!done[i]) ++out.zero;
                return out;
            }
            // e_i <- e_i + e_j turns B(i,i) into 2*B(i,j) (B(i,i)=B(j,j)=0)
            for (int k = 0; k < n; ++k) {
                if (done[k]) continue;
                B(pi, k) += B(pj, k);
            }
            for (int k = 0; k < n; ++k) {
                if (done[k]) continue;
                B(k, pi) += B(k, pj);
            }
            p = pi;
        }
        Rat d = B(p, p);
        if (d > 0)
            ++out.pos;
        else
            ++out.neg;
        done[p] = true;
        // congruence update: B(i,j) -= B(i,p)*B(j,p)/d on the remaining block
        for (int i = 0; i < n; ++i) {
            if (done[i] || B(i, p) == 0) continue;
            Rat ci = B(i, p) / d;
            for (int j = 0; j < n; ++j) {
                if (done[j]) continue;
                B(i, j) -= ci * B(p, j);
            }
        }
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            B(p, i) = 0;
            B(i, p) = 0;
        }
    }
    return out;
}

bool solve_left_z(const ZMat& A, const std::vector<Int>& b, std::vector<Int>& out) {
    // x*A = b over Z: with U*A*V = E, set z = b*V, need z_i = y_i * e_i
    ZMat U, V;
    ZMat E = snf(A, U, V);
    std::vector<Int> z = b * V;
    std::vector<Int> y(A.m, Int(0));
    int r = std::min(A.m, A.n);
    for (int i = 0; i < A.n; ++i) {
        Int e = i < r ? E(i, i) : Int(0);
        if (e == 0) {
            if (z[i] != 0) return false;
        } else {
            if (z[i] % e != 0) return false;
            if (i < A.m) y[i] = z[i] / e;
        }
    }
    out = y * U;
    return true;
}

}  // namespace latk
