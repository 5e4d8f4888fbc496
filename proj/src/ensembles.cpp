#include "qtrace/ensembles.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>

namespace qtrace {

void RandomEnsembleSpec::validate() const {
    if (n < 1) throw InvalidSpec("ensemble dimension must be positive");
    const bool boxed =
        kind == EnsembleKind::PositiveDefinite || kind == EnsembleKind::NegativeDefinite;
    const bool density_with_box =
        kind == EnsembleKind::Density && !(eig_lo == 0.0 && eig_hi == 0.0);
    if (boxed || density_with_box) {
        if (!(eig_lo < eig_hi)) throw InvalidSpec("ensemble requires eig_lo < eig_hi");
    }
    if ((kind == EnsembleKind::PositiveDefinite || density_with_box) && eig_lo <= 0.0)
        throw InvalidSpec("positive spectrum box requires eig_lo > 0");
    if (kind == EnsembleKind::NegativeDefinite && eig_hi >= 0.0)
        throw InvalidSpec("negative_definite ensemble requires eig_hi < 0");
    const int c = cols == 0 ? n : cols;
    if (c < 1) throw InvalidSpec("ensemble cols must be positive");
    if (kind == EnsembleKind::Isometry && c > n)
        throw InvalidSpec("isometry needs cols <= rows");
}

namespace {

Matrix complex_gaussian_matrix(int rows, int cols, Xoshiro256pp& rng) {
    Matrix g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_gaussian();
    return g;
}

}  // namespace

HermitianMatrix random_hermitian(int n, Xoshiro256pp& rng) {
    const Matrix g = complex_gaussian_matrix(n, n, rng);
    return HermitianMatrix(0.5 * (g + g.adjoint()));
}

Matrix haar_unitary(int n, Xoshiro256pp& rng) {
    const Matrix g = complex_gaussian_matrix(n, n, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phases so the distribution is Haar, not merely unitary.
    for (int j = 0; j < n; ++j) {
        const std::complex<double> d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= (mag > 0.0) ? d / mag : std::complex<double>(1.0, 0.0);
    }
    return q;
}

PositiveDefiniteMatrix random_positive_definite(int n, double eig_lo, double eig_hi,
                                                Xoshiro256pp& rng) {
    RealVector eigs(n);
    for (int i = 0; i < n; ++i) eigs(i) = rng.uniform(eig_lo, eig_hi);
    std::sort(eigs.data(), eigs.data() + n);
    return PositiveDefiniteMatrix(eigs, haar_unitary(n, rng));
}

HermitianMatrix random_negative_definite(int n, double eig_lo, double eig_hi,
                                         Xoshiro256pp& rng) {
    RealVector eigs(n);
    for (int i = 0; i < n; ++i) eigs(i) = rng.uniform(eig_lo, eig_hi);
    std::sort(eigs.data(), eigs.data() + n);
    const Matrix u = haar_unitary(n, rng);
    return HermitianMatrix(u * eigs.asDiagonal() * u.adjoint());
}

PositiveDefiniteMatrix random_density(int n, Xoshiro256pp& rng, double eig_lo, double eig_hi) {
    const PositiveDefiniteMatrix p = random_positive_definite(n, eig_lo, eig_hi, rng);
    const double t = p.trace();
    RealVector eigs = p.spectral().eigenvalues() / t;
    return PositiveDefiniteMatrix(eigs, p.spectral().eigenvectors());
}

ContractionMatrix random_contraction(int rows, int cols, Xoshiro256pp& rng) {
    const Matrix g = complex_gaussian_matrix(rows, cols, rng);
    Eigen::JacobiSVD<Matrix> svd(g);
    const double sigma = svd.singularValues()(0);
    return ContractionMatrix(g / (sigma * (1.0 + 1e-6)));
}

ContractionMatrix random_isometry(int rows, int cols, Xoshiro256pp& rng) {
    return ContractionMatrix(haar_unitary(rows, rng).leftCols(cols));
}

RandomMatrix random_matrix(const RandomEnsembleSpec& spec) {
    spec.validate();
    Xoshiro256pp rng(spec.seed);
    const int c = spec.cols == 0 ? spec.n : spec.cols;
    switch (spec.kind) {
        case EnsembleKind::Hermitian:
            return random_hermitian(spec.n, rng);
        case EnsembleKind::PositiveDefinite:
            return random_positive_definite(spec.n, spec.eig_lo, spec.eig_hi, rng).base();
        case EnsembleKind::NegativeDefinite:
            return random_negative_definite(spec.n, spec.eig_lo, spec.eig_hi, rng);
        case EnsembleKind::Density: {
            const bool boxed = spec.eig_lo < spec.eig_hi;
            return random_density(spec.n, rng, boxed ? spec.eig_lo : 0.05,
                                  boxed ? spec.eig_hi : 1.0)
                .base();
        }
        case EnsembleKind::Contraction:
            return random_contraction(spec.n, c, rng);
        case EnsembleKind::Isometry:
            return random_isometry(spec.n, c, rng);
    }
    throw InvalidSpec("unknown ensemble kind");
}

}  // namespace qtrace
