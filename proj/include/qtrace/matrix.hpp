#pragma once

#include <Eigen/Dense>
#include <functional>

#include "qtrace/errors.hpp"
#include "qtrace/tolerances.hpp"

namespace qtrace {

using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ScalarFn = std::function<double(double)>;

/// Largest |entry| of the difference M - M*.
double hermiticity_defect(const Matrix& m);

/// Real part of the trace. Throws if the accumulated imaginary part exceeds
/// the drift tolerance; every functional in this library is real by
/// hermiticity, so drift indicates a bug upstream.
double real_trace(const Matrix& m);

/// Re Tr(A B) without forming the product.
double real_trace_product(const Matrix& a, const Matrix& b);

class SpectralDecomposition;

/// Dense n x n complex matrix, Hermitian up to tolerance. Constructors
/// symmetrize the input as (M + M*)/2 after checking the defect, so
/// arithmetic drift never accumulates across operation chains.
class HermitianMatrix {
public:
    explicit HermitianMatrix(Matrix entries);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Matrix& entries() const { return entries_; }

    HermitianMatrix operator+(const HermitianMatrix& other) const;
    HermitianMatrix operator-(const HermitianMatrix& other) const;
    HermitianMatrix operator*(double scale) const;

    static HermitianMatrix zero(int n) { return HermitianMatrix(Matrix::Zero(n, n)); }
    static HermitianMatrix identity(int n) { return HermitianMatrix(Matrix::Identity(n, n)); }

private:
    Matrix entries_;
};

/// Eigenvalues (ascending) and unitary eigenvectors of a Hermitian matrix.
class SpectralDecomposition {
public:
    SpectralDecomposition(RealVector eigenvalues, Matrix eigenvectors);

    int dim() const { return static_cast<int>(eigenvalues_.size()); }
    const RealVector& eigenvalues() const { return eigenvalues_; }
    const Matrix& eigenvectors() const { return eigenvectors_; }

    double min_eigenvalue() const { return eigenvalues_(0); }
    double max_eigenvalue() const { return eigenvalues_(eigenvalues_.size() - 1); }

    /// U diag(lambda) U*.
    Matrix reconstruct() const;

    /// U diag(f(lambda)) U*. Throws DomainError if f throws.
    Matrix apply(const ScalarFn& f) const;

    /// Tr f(A) = sum f(lambda_i).
    double trace_of(const ScalarFn& f) const;

    /// Tr f(A) C = sum_i f(lambda_i) u_i* C u_i for Hermitian C.
    double trace_of_times(const ScalarFn& f, const Matrix& c) const;

private:
    RealVector eigenvalues_;
    Matrix eigenvectors_;
};

/// Hermitian matrix with strictly positive spectrum. Carries its spectral
/// decomposition, computed once at construction; every matrix function of a
/// positive definite operand reuses it.
class PositiveDefiniteMatrix {
public:
    explicit PositiveDefiniteMatrix(const HermitianMatrix& base);
    explicit PositiveDefiniteMatrix(Matrix entries)
        : PositiveDefiniteMatrix(HermitianMatrix(std::move(entries))) {}

    /// Trusted spectral constructor used by the random ensembles; eigenvalues
    /// must be ascending and the columns of u unitary.
    PositiveDefiniteMatrix(RealVector eigenvalues, Matrix u);

    int dim() const { return base_.dim(); }
    const HermitianMatrix& base() const { return base_; }
    const Matrix& entries() const { return base_.entries(); }
    double min_eig() const { return spectral_.min_eigenvalue(); }
    const SpectralDecomposition& spectral() const { return spectral_; }

    double trace() const { return real_trace(entries()); }

private:
    HermitianMatrix base_;
    SpectralDecomposition spectral_;
};

/// Matrix with operator norm at most one (largest singular value cached).
class ContractionMatrix {
public:
    explicit ContractionMatrix(Matrix entries);

    int rows() const { return static_cast<int>(entries_.rows()); }
    int cols() const { return static_cast<int>(entries_.cols()); }
    const Matrix& entries() const { return entries_; }
    double op_norm() const { return op_norm_; }

    /// True when H*H = I within the spectral round-trip tolerance.
    bool is_isometry() const;

    static ContractionMatrix identity(int n) { return ContractionMatrix(Matrix::Identity(n, n)); }

private:
    Matrix entries_;
    double op_norm_;
};

/// Spectral decomposition with eigenvalues sorted ascending. Throws
/// NonHermitianInput upstream (in the HermitianMatrix constructor) and
/// ConvergenceFailure if the solver fails.
SpectralDecomposition eigh(const HermitianMatrix& a);

/// U diag(f(lambda)) U* as a HermitianMatrix.
HermitianMatrix spectral_map(const HermitianMatrix& a, const ScalarFn& f);

/// A^t via the spectral calculus; defined for every real t on the positive
/// definite cone.
PositiveDefiniteMatrix matrix_power(const PositiveDefiniteMatrix& a, double t);

/// Directional (Frechet) derivative d/dt f(A + tB)|_{t=0} in the
/// Daleckii-Krein form: U [Phi o (U* B U)] U* with divided differences
/// Phi_ij = (f(l_i)-f(l_j))/(l_i-l_j), regularized through f' at the
/// midpoint when |l_i - l_j| falls below the divided-difference threshold.
HermitianMatrix frechet_derivative(const HermitianMatrix& a, const HermitianMatrix& b,
                                   const ScalarFn& f, const ScalarFn& f_prime);

}  // namespace qtrace
