#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>

#include <Eigen/Dense>

#include "demon/types.hpp"

namespace demon::qmat {

using Complex = std::complex<double>;

// Row-major so that the entry layout matches the declared basis ordering
// when read as a flat list.
using EigenMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Structural checks (hermiticity, unitarity, positivity) use this tolerance.
inline constexpr double kStructuralTol = 1e-10;

/// Raised when a matrix that must be a physical state (PSD, unit trace)
/// is not one.
class InvalidStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense complex matrix of dimension 2 (one qubit) or 4 (the joint S-D
/// register). Joint basis ordering is fixed throughout the project:
/// index = 2*q_S + q_D over (q_S, q_D) in {0,1}^2, i.e. |0,0>, |0,1>,
/// |1,0>, |1,1>, with |1> the excited state. Instances are immutable
/// after construction and safe to share across threads.
class ComplexMatrix {
public:
    /// Zero matrix. dim must be 2 or 4.
    explicit ComplexMatrix(int dim);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix from_rows(
        std::initializer_list<std::initializer_list<Complex>> rows);
    static ComplexMatrix from_eigen(EigenMatrix m);

    int dim() const { return static_cast<int>(m_.rows()); }
    Complex operator()(int row, int col) const { return m_(row, col); }
    const EigenMatrix& eigen() const { return m_; }

    ComplexMatrix adjoint() const;
    Complex trace() const { return m_.trace(); }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    friend ComplexMatrix operator*(Complex scale, const ComplexMatrix& m);

    bool is_hermitian(double tol = kStructuralTol) const;
    bool is_unitary(double tol = kStructuralTol) const;
    bool is_psd(double tol = kStructuralTol) const;

private:
    EigenMatrix m_;
};

/// Largest absolute entry of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Kronecker product of two single-qubit operators, S slot first (high bit).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// exp(-i h t) for Hermitian h, evaluated by eigendecomposition.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t);

/// Reduced state of the kept subsystem of a joint 4x4 density matrix.
ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep);

/// Von Neumann entropy in nats. Eigenvalues in [-kStructuralTol, 0) are
/// clamped to zero; anything below that raises InvalidStateError.
double vn_entropy(const ComplexMatrix& rho);

/// max |u - e^{i a} v| with the phase aligned to trace(v^dag u). Falls back
/// to the plain max-entry distance when the overlap trace vanishes.
double distance_up_to_global_phase(const ComplexMatrix& u,
                                   const ComplexMatrix& v);

/// (1/2) * sum |eigenvalues| of the Hermitian difference a - b.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace demon::qmat
