#include "demon/qmat.hpp"

#include <cmath>

namespace demon::qmat {

namespace {

void check_dim(int dim) {
    if (dim != 2 && dim != 4)
        throw std::invalid_argument("matrix dimension must be 2 or 4, got " +
                                    std::to_string(dim));
}

} // namespace

ComplexMatrix::ComplexMatrix(int dim) {
    check_dim(dim);
    m_ = EigenMatrix::Zero(dim, dim);
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    check_dim(dim);
    return from_eigen(EigenMatrix::Identity(dim, dim));
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    const int dim = static_cast<int>(rows.size());
    check_dim(dim);
    EigenMatrix m(dim, dim);
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim)
            throw std::invalid_argument("matrix rows must have equal length");
        int c = 0;
        for (Complex v : row) m(r, c++) = v;
        ++r;
    }
    return from_eigen(std::move(m));
}

ComplexMatrix ComplexMatrix::from_eigen(EigenMatrix m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("matrix must be square");
    check_dim(static_cast<int>(m.rows()));
    ComplexMatrix out(static_cast<int>(m.rows()));
    out.m_ = std::move(m);
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    return from_eigen(m_.adjoint());
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (dim() != rhs.dim())
        throw std::invalid_argument("dimension mismatch in matrix product");
    return from_eigen(m_ * rhs.m_);
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (dim() != rhs.dim())
        throw std::invalid_argument("dimension mismatch in matrix sum");
    return from_eigen(m_ + rhs.m_);
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (dim() != rhs.dim())
        throw std::invalid_argument("dimension mismatch in matrix difference");
    return from_eigen(m_ - rhs.m_);
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& m) {
    return ComplexMatrix::from_eigen(scale * m.m_);
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool ComplexMatrix::is_unitary(double tol) const {
    EigenMatrix p = m_.adjoint() * m_;
    p -= EigenMatrix::Identity(dim(), dim());
    return p.cwiseAbs().maxCoeff() <= tol;
}

bool ComplexMatrix::is_psd(double tol) const {
    if (!is_hermitian(tol)) return false;
    Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(m_,
                                                      Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -tol;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch");
    return (a.eigen() - b.eigen()).cwiseAbs().maxCoeff();
}

ComplexMatrix pauli_x() {
    return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

ComplexMatrix pauli_y() {
    return ComplexMatrix::from_rows(
        {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}});
}

ComplexMatrix pauli_z() {
    return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != 2 || b.dim() != 2)
        throw std::invalid_argument("kron expects two 2x2 factors");
    EigenMatrix out(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b.eigen();
    return ComplexMatrix::from_eigen(std::move(out));
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t) {
    if (!h.is_hermitian(1e-12))
        throw std::invalid_argument("expm_hermitian requires a Hermitian input");
    Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(h.eigen());
    const auto& evals = solver.eigenvalues();
    const EigenMatrix& vecs = solver.eigenvectors();
    Eigen::VectorXcd phases(h.dim());
    for (int k = 0; k < h.dim(); ++k)
        phases(k) = std::exp(Complex(0, -evals(k) * t));
    return ComplexMatrix::from_eigen(vecs * phases.asDiagonal() *
                                     vecs.adjoint());
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep) {
    if (rho.dim() != 4)
        throw std::invalid_argument("partial_trace expects a 4x4 state");
    if (!rho.is_hermitian(kStructuralTol))
        throw std::invalid_argument("partial_trace expects a Hermitian state");
    if (std::abs(rho.trace() - Complex(1.0)) > kStructuralTol)
        throw std::invalid_argument("partial_trace expects a unit-trace state");
    EigenMatrix out = EigenMatrix::Zero(2, 2);
    // Joint index = 2*q_S + q_D.
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                out(i, j) += (keep == Subsystem::S)
                                 ? rho(2 * i + k, 2 * j + k)
                                 : rho(2 * k + i, 2 * k + j);
    return ComplexMatrix::from_eigen(std::move(out));
}

double vn_entropy(const ComplexMatrix& rho) {
    if (!rho.is_hermitian(kStructuralTol))
        throw std::invalid_argument("vn_entropy expects a Hermitian state");
    if (std::abs(rho.trace() - Complex(1.0)) > kStructuralTol)
        throw std::invalid_argument("vn_entropy expects a unit-trace state");
    Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(rho.eigen(),
                                                      Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int k = 0; k < rho.dim(); ++k) {
        double lambda = solver.eigenvalues()(k);
        if (lambda < -kStructuralTol)
            throw InvalidStateError("vn_entropy: eigenvalue " +
                                    std::to_string(lambda) +
                                    " below -1e-10, state is not PSD");
        if (lambda <= 0.0) continue; // 0 ln 0 := 0
        s -= lambda * std::log(lambda);
    }
    return s;
}

double distance_up_to_global_phase(const ComplexMatrix& u,
                                   const ComplexMatrix& v) {
    if (u.dim() != v.dim())
        throw std::invalid_argument("dimension mismatch");
    if (!u.is_unitary(kStructuralTol) || !v.is_unitary(kStructuralTol))
        throw std::invalid_argument(
            "distance_up_to_global_phase expects unitary inputs");
    Complex tr = (v.adjoint() * u).trace();
    if (std::abs(tr) < 1e-12) return max_abs_diff(u, v);
    Complex phase = tr / std::abs(tr);
    return (u.eigen() - phase * v.eigen()).cwiseAbs().maxCoeff();
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch");
    EigenMatrix d = a.eigen() - b.eigen();
    Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(d,
                                                      Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

} // namespace demon::qmat
