#ifndef SELORB_ORBIT_REP_HPP
#define SELORB_ORBIT_REP_HPP

#include <vector>

#include "../exact/matrix.hpp"

namespace selorb {

/* A symmetric operator in V, given by B = AM on the standard basis
   e_1..e_n, u, f_n..f_1 (indices 0..2n). */
template <class T> struct OperatorRepT {
    int n = 1;
    Matrix<T> B;

    OperatorRepT() = default;
    OperatorRepT(int n_, Matrix<T> B_) : n(n_), B(std::move(B_))
    {
        require(B.rows() == 2 * n + 1 && B.cols() == 2 * n + 1, "operator matrix must be (2n+1)x(2n+1)");
    }
    int dim() const { return 2 * n + 1; }
    bool well_formed() const { return B.is_symmetric() && B.anti_trace() == T(0); }
};

using OperatorRep = OperatorRepT<Z>;
using OperatorRepQ = OperatorRepT<Q>;

/* (c_2, ..., c_{2n+1}) of (-1)^n det(xA - B) */
template <class T> std::vector<T> invariants(const OperatorRepT<T> &r)
{
    Poly<T> f = charpoly_pencil(r.B, r.n);
    int d = 2 * r.n + 1;
    std::vector<T> c;
    for (int m = 2; m <= d; ++m)
        c.push_back(f[d - m]);
    return c;
}

/* dimension of V: symmetric matrices with anti-trace zero */
inline int v_dimension(int n) { return n * (2 * n + 3); }

inline int basis_index_e(int n, int i) { (void)n; return i - 1; }
inline int basis_index_u(int n) { return n; }
inline int basis_index_f(int n, int i) { return 2 * n + 1 - i; }

/* T = A^{-1} B = A B */
template <class T> Matrix<T> operator_matrix(const OperatorRepT<T> &r)
{
    return anti_identity<T>(r.dim()) * r.B;
}

template <class T> OperatorRepT<T> from_operator(int n, const Matrix<T> &M)
{
    return OperatorRepT<T>(n, anti_identity<T>(2 * n + 1) * M);
}

/* E: f_1 -> f_2 -> ... -> f_n -> u -> e_n -> ... -> e_1 -> 0 */
inline OperatorRep nilpotent_regular(int n)
{
    require(n >= 1, "genus must be positive");
    int N = 2 * n + 1;
    MatZ M(N, N);
    for (int k = 1; k < N; ++k)
        M(k - 1, k) = 1;
    return from_operator(n, M);
}

/* d E': the same chain with u skipped (f_n -> e_n) and u -> 0 */
inline OperatorRep nilpotent_subregular(int n, const Z &d)
{
    require(n >= 1, "genus must be positive");
    if (d == 0)
        throw validation_error("subregular scalar d must be nonzero");
    int N = 2 * n + 1;
    MatZ M(N, N);
    for (int k = 1; k < N; ++k) {
        if (k == n || k == n + 1)
            continue;
        M(k - 1, k) = d;
    }
    M(n - 1, n + 1) = d;
    return from_operator(n, M);
}

struct BlockTests {
    bool disc_zero_block = false;
    bool distinguished_shape = false;
};

/* zero-block criteria on the Gram matrix B (0-indexed: k x (2n+1-k) block;
   distinguished shape: b_ij = 0 for i+j < 2n-1) */
template <class T> BlockTests reducibility_block_tests(const OperatorRepT<T> &r)
{
    int n = r.n, N = r.dim();
    BlockTests t;
    for (int k = 1; k <= n && !t.disc_zero_block; ++k) {
        bool zero = true;
        for (int i = 0; i < k && zero; ++i)
            for (int j = 0; j < N - k && zero; ++j)
                zero = r.B(i, j) == T(0);
        t.disc_zero_block = zero;
    }
    t.distinguished_shape = true;
    for (int i = 0; i < N && t.distinguished_shape; ++i)
        for (int j = 0; i + j < N - 2; ++j)
            if (r.B(i, j) != T(0)) {
                t.distinguished_shape = false;
                break;
            }
    return t;
}

/* minimal-polynomial degree of a square matrix over Q via dimension of
   span{I, M, M^2, ...} */
inline int minpoly_degree(const MatQ &M)
{
    int N = M.rows();
    std::vector<Q> rows;
    MatQ P = MatQ::identity(N);
    int deg = 0;
    for (int k = 0; k <= N; ++k) {
        for (auto &v : P.data())
            rows.push_back(v);
        MatQ S(k + 1, N * N, rows);
        if (rank(S) < k + 1)
            return deg;
        deg = k + 1;
        P = P * M;
    }
    return deg;
}

} // namespace selorb

#endif
