#include "qtrace/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>
#include <utility>

namespace qtrace {

double hermiticity_defect(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double real_trace(const Matrix& m) {
    double re = 0.0, im = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        re += m(i, i).real();
        im += m(i, i).imag();
    }
    if (std::abs(im) > tol::trace_imag_drift) {
        std::ostringstream oss;
        oss << "trace has imaginary drift " << im << "; expected a real-valued functional";
        throw DomainError(oss.str());
    }
    return re;
}

double real_trace_product(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw DomainError("real_trace_product: incompatible shapes");
    std::complex<double> t{0.0, 0.0};
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
    if (std::abs(t.imag()) > tol::trace_imag_drift) {
        std::ostringstream oss;
        oss << "trace of product has imaginary drift " << t.imag();
        throw DomainError(oss.str());
    }
    return t.real();
}

HermitianMatrix::HermitianMatrix(Matrix entries) {
    if (entries.rows() != entries.cols() || entries.rows() < 1)
        throw NonHermitianInput("matrix must be square and non-empty");
    const double scale = entries.cwiseAbs().maxCoeff();
    const double tolerance = std::max(tol::hermiticity_rel * scale, tol::hermiticity_floor);
    const double defect = hermiticity_defect(entries);
    if (defect > tolerance) {
        std::ostringstream oss;
        oss << "hermiticity defect " << defect << " exceeds tolerance " << tolerance;
        throw NonHermitianInput(oss.str());
    }
    entries_ = 0.5 * (entries + entries.adjoint());
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
    return HermitianMatrix(entries_ + other.entries_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
    return HermitianMatrix(entries_ - other.entries_);
}

HermitianMatrix HermitianMatrix::operator*(double scale) const {
    return HermitianMatrix(entries_ * scale);
}

SpectralDecomposition::SpectralDecomposition(RealVector eigenvalues, Matrix eigenvectors)
    : eigenvalues_(std::move(eigenvalues)), eigenvectors_(std::move(eigenvectors)) {
    for (Eigen::Index i = 1; i < eigenvalues_.size(); ++i)
        if (eigenvalues_(i - 1) > eigenvalues_(i))
            throw ConvergenceFailure("eigenvalues not sorted ascending");
}

Matrix SpectralDecomposition::reconstruct() const {
    return eigenvectors_ * eigenvalues_.asDiagonal() * eigenvectors_.adjoint();
}

Matrix SpectralDecomposition::apply(const ScalarFn& f) const {
    RealVector mapped(eigenvalues_.size());
    for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) mapped(i) = f(eigenvalues_(i));
    return eigenvectors_ * mapped.asDiagonal() * eigenvectors_.adjoint();
}

double SpectralDecomposition::trace_of(const ScalarFn& f) const {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) sum += f(eigenvalues_(i));
    return sum;
}

double SpectralDecomposition::trace_of_times(const ScalarFn& f, const Matrix& c) const {
    if (c.rows() != dim() || c.cols() != dim())
        throw DomainError("trace_of_times: dimension mismatch");
    // sum_i f(l_i) u_i* C u_i; the imaginary parts of the quadratic forms
    // vanish for Hermitian C.
    double sum = 0.0;
    for (int i = 0; i < dim(); ++i) {
        const auto u = eigenvectors_.col(i);
        const std::complex<double> quad = u.dot(c * u);
        sum += f(eigenvalues_(i)) * quad.real();
    }
    return sum;
}

SpectralDecomposition eigh(const HermitianMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a.entries());
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("self-adjoint eigensolver did not converge");
    return SpectralDecomposition(solver.eigenvalues(), solver.eigenvectors());
}

HermitianMatrix spectral_map(const HermitianMatrix& a, const ScalarFn& f) {
    return HermitianMatrix(eigh(a).apply(f));
}

PositiveDefiniteMatrix::PositiveDefiniteMatrix(const HermitianMatrix& base)
    : base_(base), spectral_(eigh(base)) {
    if (spectral_.min_eigenvalue() <= tol::pd_floor) {
        std::ostringstream oss;
        oss << "matrix is not positive definite: min eigenvalue " << spectral_.min_eigenvalue()
            << " is at or below the floor " << tol::pd_floor;
        throw DomainError(oss.str());
    }
}

PositiveDefiniteMatrix::PositiveDefiniteMatrix(RealVector eigenvalues, Matrix u)
    : base_(u * eigenvalues.asDiagonal() * u.adjoint()),
      spectral_(std::move(eigenvalues), std::move(u)) {
    if (spectral_.min_eigenvalue() <= tol::pd_floor)
        throw DomainError("spectral constructor: eigenvalues not above the pd floor");
}

ContractionMatrix::ContractionMatrix(Matrix entries) : entries_(std::move(entries)) {
    Eigen::JacobiSVD<Matrix> svd(entries_);
    op_norm_ = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
    if (op_norm_ > 1.0 + 1e-12) {
        std::ostringstream oss;
        oss << "operator norm " << op_norm_ << " exceeds 1";
        throw DomainError(oss.str());
    }
}

bool ContractionMatrix::is_isometry() const {
    const Matrix gram = entries_.adjoint() * entries_;
    return (gram - Matrix::Identity(cols(), cols())).cwiseAbs().maxCoeff() <=
           tol::spectral_roundtrip;
}

PositiveDefiniteMatrix matrix_power(const PositiveDefiniteMatrix& a, double t) {
    const auto& sd = a.spectral();
    RealVector powered(sd.dim());
    for (int i = 0; i < sd.dim(); ++i)
        powered(i) = std::exp(t * std::log(sd.eigenvalues()(i)));
    // Powers of ascending positive eigenvalues stay sorted (up to order
    // reversal for negative t), so re-sort before the trusted constructor.
    Matrix u = sd.eigenvectors();
    if (t < 0.0) {
        powered.reverseInPlace();
        u = u.rowwise().reverse();
    }
    return PositiveDefiniteMatrix(powered, u);
}

HermitianMatrix frechet_derivative(const HermitianMatrix& a, const HermitianMatrix& b,
                                   const ScalarFn& f, const ScalarFn& f_prime) {
    if (a.dim() != b.dim()) throw DomainError("frechet_derivative: dimension mismatch");
    const SpectralDecomposition sd = eigh(a);
    const auto& lambda = sd.eigenvalues();
    const Matrix bt = sd.eigenvectors().adjoint() * b.entries() * sd.eigenvectors();
    Matrix scaled(a.dim(), a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            const double gap = lambda(i) - lambda(j);
            const double phi = std::abs(gap) > tol::divided_difference
                                   ? (f(lambda(i)) - f(lambda(j))) / gap
                                   : f_prime(0.5 * (lambda(i) + lambda(j)));
            scaled(i, j) = phi * bt(i, j);
        }
    }
    return HermitianMatrix(sd.eigenvectors() * scaled * sd.eigenvectors().adjoint());
}

}  // namespace qtrace
