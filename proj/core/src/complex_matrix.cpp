#include "inertia/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "inertia/errors.hpp"

namespace inertia {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatch("entry count does not match rows*cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("ragged initializer");
        std::size_t j = 0;
        for (cplx v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const cplx> v) {
    ComplexMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix c(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) c.entries_[k] = std::conj(entries_[k]);
    return c;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix a(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a(j, i) = std::conj((*this)(i, j));
    return a;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
    if (!square()) throw NonSquare("hermitian_part needs a square matrix");
    ComplexMatrix h(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            h(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return h;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    const std::size_t n = std::min(rows_, cols_);
    for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : entries_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    if (!square()) throw NonSquare("hermiticity_defect needs a square matrix");
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

bool ComplexMatrix::is_hermitian(double rel_tol) const {
    if (!square()) return false;
    return hermiticity_defect() <= rel_tol * (1.0 + frobenius_norm());
}

std::vector<cplx> ComplexMatrix::col(std::size_t j) const {
    std::vector<cplx> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<cplx> ComplexMatrix::row(std::size_t i) const {
    std::vector<cplx> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

void ComplexMatrix::set_col(std::size_t j, std::span<const cplx> v) {
    if (v.size() != rows_) throw DimensionMismatch("set_col length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("operator+= shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("operator-= shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& v : entries_) v *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

double vec_norm(std::span<const cplx> v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

cplx vec_dot(std::span<const cplx> x, std::span<const cplx> y) {
    if (x.size() != y.size()) throw DimensionMismatch("vec_dot length mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

std::vector<cplx> matvec(const ComplexMatrix& m, std::span<const cplx> v) {
    if (m.cols() != v.size()) throw DimensionMismatch("matvec length mismatch");
    std::vector<cplx> out(m.rows(), cplx{0.0, 0.0});
    for (std::size_t i = 0; i < m.rows(); ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

std::vector<cplx> kron_vec(std::span<const cplx> a, std::span<const cplx> b) {
    std::vector<cplx> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

void normalize(std::vector<cplx>& v) {
    const double n = vec_norm(v);
    if (n < 1e-300) throw ZeroVector("cannot normalize the zero vector");
    for (cplx& x : v) x /= n;
}

void canonicalize_phase(std::vector<cplx>& v, double threshold) {
    for (const cplx& x : v) {
        const double a = std::abs(x);
        if (a > threshold) {
            const cplx rot = std::conj(x) / a;
            for (cplx& y : v) y *= rot;
            return;
        }
    }
}

}  // namespace inertia
