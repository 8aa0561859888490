#pragma once

#include "ncq/errors.hpp"
#include "ncq/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace ncq {

// Dense square matrix over F, row-major.
template <Field F>
class Matrix {
public:
    using field_type = F;

    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), a_(n * n, F(0)) {}
    Matrix(std::initializer_list<std::initializer_list<F>> rows);

    static Matrix zero(std::size_t n) { return Matrix(n); }
    static Matrix scalar(std::size_t n, const F& s) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }
    static Matrix identity(std::size_t n) { return scalar(n, F(1)); }

    std::size_t dim() const { return n_; }
    bool empty() const { return n_ == 0; }

    F& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!FieldTraits<F>::is_zero(x)) return false;
        return true;
    }
    bool is_scalar(const F& s) const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (!((*this)(i, j) == (i == j ? s : F(0)))) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        same_dim(o, "+");
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        same_dim(o, "-");
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const F& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }
    // M + sI and M - sI
    Matrix& operator+=(const F& s) {
        for (std::size_t i = 0; i < n_; ++i) (*this)(i, i) += s;
        return *this;
    }
    Matrix& operator-=(const F& s) {
        for (std::size_t i = 0; i < n_; ++i) (*this)(i, i) -= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator+(Matrix a, const F& s) { return a += s; }
    friend Matrix operator-(Matrix a, const F& s) { return a -= s; }
    friend Matrix operator+(const F& s, Matrix a) { return a += s; }
    friend Matrix operator-(const F& s, const Matrix& a) { return -a + s; }
    friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
    friend Matrix operator*(const F& s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.a_) x = -x;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.same_dim(b, "*");
        const std::size_t n = a.n_;
        Matrix c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const F& aik = a(i, k);
                if (FieldTraits<F>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    Matrix& operator*=(const Matrix& o) { return *this = *this * o; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t k = 0; k < a.a_.size(); ++k)
            if (!(a.a_[k] == b.a_[k])) return false;
        return true;
    }

private:
    void same_dim(const Matrix& o, const char* op) const {
        if (o.n_ != n_)
            throw DimensionMismatch(std::string("matrix ") + op + ": dim " +
                                    std::to_string(n_) + " vs " + std::to_string(o.n_));
    }

    std::size_t n_ = 0;
    std::vector<F> a_;
};

template <Field F>
Matrix<F>::Matrix(std::initializer_list<std::initializer_list<F>> rows) : Matrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw DimensionMismatch("matrix literal is not square");
        std::size_t j = 0;
        for (const auto& x : row) (*this)(i, j++) = x;
        ++i;
    }
}

template <Field F>
double frobenius_norm(const Matrix<F>& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            double x = FieldTraits<F>::magnitude(m(i, j));
            s += x * x;
        }
    return std::sqrt(s);
}

template <Field F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
    return a * b - b * a;
}

// Pivots below this fraction of the largest remaining entry in their row
// count as zero for floating point inversion.
inline constexpr double singular_threshold = 1e-12;

// Gauss-Jordan elimination. Exact kinds take the first nonzero pivot;
// ComplexFloat uses partial pivoting with a relative threshold.
template <Field F>
Matrix<F> inverse(const Matrix<F>& m) {
    const std::size_t n = m.dim();
    Matrix<F> a = m;
    Matrix<F> inv = Matrix<F>::identity(n);
    // Largest entry of each input row, following the row through swaps.
    std::vector<double> rowmag(n, 0.0);
    if constexpr (!FieldTraits<F>::exact)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t j = 0; j < n; ++j) rowmag[r] = std::max(rowmag[r], std::abs(m(r, j)));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        if constexpr (FieldTraits<F>::exact) {
            for (std::size_t r = col; r < n; ++r)
                if (!FieldTraits<F>::is_zero(a(r, col))) {
                    piv = r;
                    break;
                }
        } else {
            double best = 0.0;
            for (std::size_t r = col; r < n; ++r) {
                double x = std::abs(a(r, col));
                if (x > best) {
                    best = x;
                    piv = r;
                }
            }
            if (piv != n && best < singular_threshold * rowmag[piv]) piv = n;
        }
        if (piv == n) throw Singular("matrix is singular (pivot column " + std::to_string(col) + ")");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
            std::swap(rowmag[piv], rowmag[col]);
        }
        const F p = F(1) / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= p;
            inv(col, j) *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const F f = a(r, col);
            if (FieldTraits<F>::is_zero(f)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

// Exact kinds: entrywise equality. ComplexFloat: ||a-b||_F <= tol * max(1, ||b||_F).
template <Field F>
bool approx_equal(const Matrix<F>& a, const Matrix<F>& b, double tol) {
    if constexpr (FieldTraits<F>::exact) {
        (void)tol;
        return a == b;
    } else {
        return frobenius_norm(a - b) <= tol * std::max(1.0, frobenius_norm(b));
    }
}

template <Field F>
Matrix<Complex> to_complex(const Matrix<F>& m) {
    Matrix<Complex> c(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) c(i, j) = FieldTraits<F>::to_complex(m(i, j));
    return c;
}

template <Field F>
std::string to_string(const Matrix<F>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        out += '[';
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out += ", ";
            out += FieldTraits<F>::format(m(i, j));
        }
        out += "]\n";
    }
    return out;
}

}  // namespace ncq
