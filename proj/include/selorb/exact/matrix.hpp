#ifndef SELORB_EXACT_MATRIX_HPP
#define SELORB_EXACT_MATRIX_HPP

#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace selorb {

/* Row-major dense matrix over a commutative ring T with T(0), T(1). */
template <class T> class Matrix {
  public:
    Matrix() = default;
    Matrix(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c, T(0)) {}
    Matrix(int r, int c, std::vector<T> a) : r_(r), c_(c), a_(std::move(a))
    {
        require(a_.size() == static_cast<size_t>(r) * c, "matrix entry count mismatch");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        r_ = static_cast<int>(rows.size());
        c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
        for (auto &row : rows) {
            require(static_cast<int>(row.size()) == c_, "ragged matrix literal");
            for (auto &v : row)
                a_.push_back(v);
        }
    }

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    bool square() const { return r_ == c_; }
    T &operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const T &operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
    const std::vector<T> &data() const { return a_; }

    Matrix transpose() const
    {
        Matrix t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const
    {
        if (!square())
            return false;
        for (int i = 0; i < r_; ++i)
            for (int j = i + 1; j < c_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    T trace() const
    {
        T s(0);
        for (int i = 0; i < r_; ++i)
            s += (*this)(i, i);
        return s;
    }

    /* sum of the anti-diagonal entries */
    T anti_trace() const
    {
        T s(0);
        for (int i = 0; i < r_; ++i)
            s += (*this)(i, r_ - 1 - i);
        return s;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        require(a.c_ == b.r_, "matrix product dimension mismatch");
        Matrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const T &x = a(i, k);
                if (x == 0)
                    continue;
                for (int j = 0; j < b.c_; ++j)
                    m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(Matrix a, const Matrix &b)
    {
        require(a.r_ == b.r_ && a.c_ == b.c_, "matrix sum dimension mismatch");
        for (size_t i = 0; i < a.a_.size(); ++i)
            a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix &b)
    {
        require(a.r_ == b.r_ && a.c_ == b.c_, "matrix difference dimension mismatch");
        for (size_t i = 0; i < a.a_.size(); ++i)
            a.a_[i] -= b.a_[i];
        return a;
    }
    friend Matrix operator*(const T &s, Matrix a)
    {
        for (auto &v : a.a_)
            v = s * v;
        return a;
    }
    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix &a, const Matrix &b) { return !(a == b); }

    template <class F> auto map(F f) const
    {
        using U = decltype(f(a_[0]));
        Matrix<U> m(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                m(i, j) = f((*this)(i, j));
        return m;
    }

    void swap_rows(int i, int j)
    {
        for (int k = 0; k < c_; ++k)
            std::swap((*this)(i, k), (*this)(j, k));
    }

    Matrix minor_matrix(int dr, int dc) const
    {
        Matrix m(r_ - 1, c_ - 1);
        for (int i = 0, ii = 0; i < r_; ++i) {
            if (i == dr)
                continue;
            for (int j = 0, jj = 0; j < c_; ++j) {
                if (j == dc)
                    continue;
                m(ii, jj++) = (*this)(i, j);
            }
            ++ii;
        }
        return m;
    }

  private:
    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using MatZ = Matrix<Z>;
using MatQ = Matrix<Q>;

/* Fraction-free determinant; T needs exact_div(T, T). */
template <class T> T det_bareiss(Matrix<T> m)
{
    require(m.square(), "determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0)
        return T(1);
    T prev(1);
    bool neg = false;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == T(0)) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != T(0)) {
                    piv = i;
                    break;
                }
            if (piv < 0)
                return T(0);
            m.swap_rows(k, piv);
            neg = !neg;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return neg ? T(-d) : d;
}

/* Laplace expansion along the first row; only for small sizes */
template <class T> T det_cofactor(const Matrix<T> &m)
{
    require(m.square(), "determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0)
        return T(1);
    if (n == 1)
        return m(0, 0);
    T s(0);
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == T(0))
            continue;
        T t = m(0, j) * det_cofactor(m.minor_matrix(0, j));
        if (j % 2)
            s -= t;
        else
            s += t;
    }
    return s;
}

/* anti-identity of size 2n+1 */
inline MatZ standard_form(int n)
{
    require(n >= 1, "genus must be positive");
    int N = 2 * n + 1;
    MatZ a(N, N);
    for (int i = 0; i < N; ++i)
        a(i, N - 1 - i) = 1;
    return a;
}

template <class T> Matrix<T> anti_identity(int N)
{
    Matrix<T> a(N, N);
    for (int i = 0; i < N; ++i)
        a(i, N - 1 - i) = T(1);
    return a;
}

/* (-1)^n det(xA - B) over T[x], fraction-free */
template <class T> Poly<T> charpoly_pencil(const Matrix<T> &B, int n)
{
    int N = 2 * n + 1;
    require(B.rows() == N && B.cols() == N, "charpoly_pencil: dimension mismatch");
    Matrix<Poly<T>> m(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Poly<T> e(-B(i, j));
            if (i + j == N - 1)
                e += Poly<T>::x();
            m(i, j) = e;
        }
    Poly<T> d = det_bareiss(m);
    return n % 2 ? -d : d;
}

/* det(xI - M) for a square matrix */
template <class T> Poly<T> charpoly(const Matrix<T> &M)
{
    require(M.square(), "charpoly of non-square matrix");
    int N = M.rows();
    Matrix<Poly<T>> m(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Poly<T> e(-M(i, j));
            if (i == j)
                e += Poly<T>::x();
            m(i, j) = e;
        }
    return det_bareiss(m);
}

inline MatQ to_Q(const MatZ &m)
{
    return m.map([](const Z &v) { return Q(v); });
}

/* inverse over Q by Gauss-Jordan */
inline MatQ inverse(const MatQ &m0)
{
    require(m0.square(), "inverse of non-square matrix");
    int n = m0.rows();
    MatQ m = m0, inv = MatQ::identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            throw validation_error("singular matrix");
        m.swap_rows(k, piv);
        inv.swap_rows(k, piv);
        Q s = 1 / m(k, k);
        for (int j = 0; j < n; ++j) {
            m(k, j) *= s;
            inv(k, j) *= s;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0)
                continue;
            Q t = m(i, k);
            for (int j = 0; j < n; ++j) {
                m(i, j) -= t * m(k, j);
                inv(i, j) -= t * inv(k, j);
            }
        }
    }
    return inv;
}

inline int rank(MatQ m)
{
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        m.swap_rows(r, piv);
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0)
                continue;
            Q t = m(i, c) / m(r, c);
            for (int j = c; j < m.cols(); ++j)
                m(i, j) -= t * m(r, j);
        }
        ++r;
    }
    return r;
}

template <class T> std::vector<std::vector<std::string>> to_strings(const Matrix<T> &m)
{
    std::vector<std::vector<std::string>> out(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out[i].push_back(m(i, j).get_str());
    return out;
}

} // namespace selorb

#endif
