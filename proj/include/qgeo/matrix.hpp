#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace qgeo {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. Small fixed dimensions (2 and 4)
// dominate the workload, so everything is plain loops over contiguous
// storage; no expression templates, no views.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
    ComplexMatrix(std::size_t dim, std::initializer_list<cplx> entries);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;        // max entry magnitude
    bool all_finite() const;

    // max-abs of (M - M^dagger); 0 for exactly Hermitian input
    double hermiticity_defect() const;

private:
    std::size_t dim_ = 0;
    std::vector<cplx> a_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx s, ComplexMatrix m);

// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

// Hilbert-Schmidt inner product tr(X^dagger Y), conjugate-linear in X.
cplx hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);

// Kronecker product; block (i,j) of the result is a(i,j) * b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Partial transpose over the first factor of a 4x4 two-qubit matrix,
// basis order |00>,|01>,|10>,|11| with the first qubit as the slow index:
// result[(i,j),(k,l)] = m[(k,j),(i,l)]. Involutive and entry-exact.
ComplexMatrix partial_transpose_first(const ComplexMatrix& m);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// E_ij: single 1 at (i, j).
ComplexMatrix matrix_unit(std::size_t dim, std::size_t i, std::size_t j);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

// Hermitian eigendecomposition. dim 2 uses the closed form; larger
// dimensions run cyclic complex Jacobi sweeps (unitary similarity only).
// Throws std::invalid_argument if the input is not Hermitian to 1e-12,
// std::runtime_error if Jacobi fails to converge in 100 sweeps.
EigenDecomposition eigh(const ComplexMatrix& m);

// Sum of singular values; for the Hermitian matrices this project feeds it,
// that is the sum of |eigenvalue|.
double trace_norm(const ComplexMatrix& m);

}  // namespace qgeo
