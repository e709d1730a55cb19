#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace inertia {

using cplx = std::complex<double>;

/// Dense row-major complex matrix, the carrier type for everything else.
/// Values are immutable in spirit: operations return new matrices and never
/// alias, so instances are safe to share across threads.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> d);
    static ComplexMatrix diagonal(std::span<const cplx> d);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
    static ComplexMatrix column(std::span<const cplx> v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return entries_.empty(); }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<cplx> entries() { return entries_; }
    std::span<const cplx> entries() const { return entries_; }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;
    /// (M + M†)/2; requires a square matrix.
    ComplexMatrix hermitian_part() const;

    cplx trace() const;
    double frobenius_norm() const;
    /// max_{i,j} |a_ij - conj(a_ji)| for square matrices.
    double hermiticity_defect() const;
    /// defect <= rel_tol * (1 + frobenius_norm())
    bool is_hermitian(double rel_tol = 1e-8) const;

    std::vector<cplx> col(std::size_t j) const;
    std::vector<cplx> row(std::size_t i) const;
    void set_col(std::size_t j, std::span<const cplx> v);

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Vector helpers. Column vectors are plain std::vector<cplx>.
double vec_norm(std::span<const cplx> v);
/// <x, y> with conjugation on the first argument.
cplx vec_dot(std::span<const cplx> x, std::span<const cplx> y);
std::vector<cplx> matvec(const ComplexMatrix& m, std::span<const cplx> v);
std::vector<cplx> kron_vec(std::span<const cplx> a, std::span<const cplx> b);
/// In-place scale so the vector has unit norm; throws ZeroVector on ~0 input.
void normalize(std::vector<cplx>& v);
/// Rotate a global phase so the first component above `threshold` in magnitude
/// becomes real positive. No-op on the zero vector.
void canonicalize_phase(std::vector<cplx>& v, double threshold = 1e-12);

}  // namespace inertia
