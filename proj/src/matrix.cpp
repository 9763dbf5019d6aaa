#include "qgeo/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qgeo {

namespace {

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch " +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<cplx> entries)
    : dim_(dim), a_(entries) {
    if (a_.size() != dim * dim)
        throw std::invalid_argument("ComplexMatrix: initializer has " +
                                    std::to_string(a_.size()) + " entries, need " +
                                    std::to_string(dim * dim));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    check_same_dim(*this, rhs, "operator+");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    check_same_dim(*this, rhs, "operator-");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double ComplexMatrix::hermiticity_defect() const {
    double d = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    check_same_dim(lhs, rhs, "operator*");
    const std::size_t n = lhs.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = lhs(i, k);
            if (aik == cplx(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }

ComplexMatrix adjoint(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = std::conj(m(j, i));
    return out;
}

cplx hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_dim(x, y, "hs_inner");
    cplx s = 0.0;
    const std::size_t n = x.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += std::conj(x(i, j)) * y(i, j);
    return s;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0)) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix partial_transpose_first(const ComplexMatrix& m) {
    if (m.dim() != 4)
        throw std::invalid_argument("partial_transpose_first: need dim 4, got " +
                                    std::to_string(m.dim()));
    ComplexMatrix out(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    out(2 * i + j, 2 * k + l) = m(2 * k + j, 2 * i + l);
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

ComplexMatrix matrix_unit(std::size_t dim, std::size_t i, std::size_t j) {
    if (i >= dim || j >= dim)
        throw std::invalid_argument("matrix_unit: index (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") out of range for dim " +
                                    std::to_string(dim));
    ComplexMatrix m(dim);
    m(i, j) = 1.0;
    return m;
}

namespace {

// 2x2 Hermitian closed form. For H = [[a, z], [conj(z), b]] the eigenvalues
// are m -/+ r with m = (a+b)/2, r = hypot((a-b)/2, |z|). The eigenvector for
// the smaller eigenvalue is read off the row of (H - lambda I) with the
// larger norm, which avoids cancellation when z is tiny.
EigenDecomposition eigh_2x2(const ComplexMatrix& h) {
    const double a = h(0, 0).real();
    const double b = h(1, 1).real();
    const cplx z = h(0, 1);
    const double w = std::abs(z);

    EigenDecomposition out;
    out.eigenvectors = ComplexMatrix(2);

    if (w < 1e-300) {
        if (a <= b) {
            out.eigenvalues = {a, b};
            out.eigenvectors(0, 0) = 1.0;
            out.eigenvectors(1, 1) = 1.0;
        } else {
            out.eigenvalues = {b, a};
            out.eigenvectors(1, 0) = 1.0;
            out.eigenvectors(0, 1) = 1.0;
        }
        return out;
    }

    const double m = 0.5 * (a + b);
    const double half = 0.5 * (a - b);
    const double r = std::hypot(half, w);
    const double lo = m - r;
    const double hi = m + r;
    out.eigenvalues = {lo, hi};

    // (H - lo I) v = 0; candidate rows give v = (-z, a - lo) or (lo - b, conj(z)).
    cplx v0, v1;
    const double n1 = std::hypot(w, a - lo);
    const double n2 = std::hypot(lo - b, w);
    if (n1 >= n2) {
        v0 = -z / n1;
        v1 = cplx(a - lo) / n1;
    } else {
        v0 = cplx(lo - b) / n2;
        v1 = std::conj(z) / n2;
    }
    out.eigenvectors(0, 0) = v0;
    out.eigenvectors(1, 0) = v1;
    // Orthogonal partner for the larger eigenvalue.
    out.eigenvectors(0, 1) = -std::conj(v1);
    out.eigenvectors(1, 1) = std::conj(v0);
    (void)hi;
    return out;
}

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Cyclic complex Jacobi. Each rotation zeroes one off-diagonal pair with a
// unitary J that is the identity outside rows/columns (p, q):
//   J(p,p) = c, J(p,q) = s, J(q,p) = -s e^{-i phi}, J(q,q) = c e^{-i phi}
// with e^{i phi} = A(p,q)/|A(p,q)| and (c, s) the standard symmetric-Jacobi
// pair for the phase-stripped 2x2 block.
EigenDecomposition eigh_jacobi(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double tol = 1e-14 * std::max(1.0, m.frobenius_norm());
    const int max_sweeps = 100;

    int sweep = 0;
    while (offdiag_norm(a) > tol) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("eigh: Jacobi did not converge in " +
                                     std::to_string(max_sweeps) + " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx z = a(p, q);
                const double w = std::abs(z);
                if (w < 1e-300) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const cplx e = z / w;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * w);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx ebar = std::conj(e);

                // columns: A <- A J
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - s * ebar * akq;
                    a(k, q) = s * akp + c * ebar * akq;
                }
                // rows: A <- J^dagger A
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk - s * e * aqk;
                    a(q, k) = s * apk + c * e * aqk;
                }
                // V accumulates the same column operations.
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp - s * ebar * vkq;
                    v(k, q) = s * vkp + c * ebar * vkq;
                }
                // The rotation is built to annihilate this pair; pin the
                // roundoff so the iterate stays exactly Hermitian.
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

}  // namespace

EigenDecomposition eigh(const ComplexMatrix& m) {
    if (m.dim() == 0) throw std::invalid_argument("eigh: empty matrix");
    if (!m.all_finite()) throw std::invalid_argument("eigh: non-finite entry");
    if (m.hermiticity_defect() > 1e-12)
        throw std::invalid_argument("eigh: input not Hermitian (defect " +
                                    std::to_string(m.hermiticity_defect()) + ")");
    if (m.dim() == 1) {
        EigenDecomposition out;
        out.eigenvalues = {m(0, 0).real()};
        out.eigenvectors = ComplexMatrix::identity(1);
        return out;
    }
    if (m.dim() == 2) return eigh_2x2(m);
    return eigh_jacobi(m);
}

double trace_norm(const ComplexMatrix& m) {
    const auto ed = eigh(m);
    double s = 0.0;
    for (double lam : ed.eigenvalues) s += std::abs(lam);
    return s;
}

}  // namespace qgeo
