#pragma once

#include <cstdint>
#include <variant>

#include "qtrace/matrix.hpp"
#include "qtrace/rng.hpp"

namespace qtrace {

enum class EnsembleKind {
    Hermitian,
    PositiveDefinite,
    Density,
    Contraction,
    Isometry,
    NegativeDefinite,
};

/// Deterministic description of one random draw. Identical specs produce
/// bit-identical matrices.
struct RandomEnsembleSpec {
    EnsembleKind kind = EnsembleKind::Hermitian;
    int n = 2;
    int cols = 0;  // contraction/isometry only; 0 means square
    double eig_lo = 0.0;
    double eig_hi = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

using RandomMatrix = std::variant<HermitianMatrix, ContractionMatrix>;

RandomMatrix random_matrix(const RandomEnsembleSpec& spec);

// Typed generators behind random_matrix; these are what the verifiers use.
HermitianMatrix random_hermitian(int n, Xoshiro256pp& rng);
Matrix haar_unitary(int n, Xoshiro256pp& rng);
PositiveDefiniteMatrix random_positive_definite(int n, double eig_lo, double eig_hi,
                                                Xoshiro256pp& rng);
HermitianMatrix random_negative_definite(int n, double eig_lo, double eig_hi, Xoshiro256pp& rng);
PositiveDefiniteMatrix random_density(int n, Xoshiro256pp& rng, double eig_lo = 0.05,
                                      double eig_hi = 1.0);
ContractionMatrix random_contraction(int rows, int cols, Xoshiro256pp& rng);
ContractionMatrix random_isometry(int rows, int cols, Xoshiro256pp& rng);

}  // namespace qtrace
