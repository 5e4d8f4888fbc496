#pragma once

#include <vector>

#include "qtrace/deformed.hpp"
#include "qtrace/matrix.hpp"

namespace qtrace {

/// Arguments of the relative trace functional Tr X^(2-q)(log_q X - H* log_q(A) H).
/// H maps the space of X into the space of A, so H is dim(A) x dim(X).
struct RelativeFunctionalInput {
    PositiveDefiniteMatrix x;
    PositiveDefiniteMatrix a;
    ContractionMatrix h;
    DeformationParameter q;

    void validate() const;
};

/// Arguments of the multivariate map phi(A_1,...,A_k) with the completeness
/// condition sum H_i* H_i = I.
struct MultiTermInput {
    std::vector<PositiveDefiniteMatrix> a_list;
    std::vector<ContractionMatrix> h_list;
    DeformationParameter q;

    int k() const { return static_cast<int>(a_list.size()); }
    void validate() const;
};

/// Tsallis relative entropy D_p(X|Y) = (Tr X - Tr X^p Y^(1-p))/(1-p) for
/// p in [0,1); switches to the Umegaki form Tr X(log X - log Y) within the
/// p=1 crossover window.
double tsallis_relative_entropy(const PositiveDefiniteMatrix& x, const PositiveDefiniteMatrix& y,
                                double p);

/// Tr X^(2-q)(log_q X - H* log_q(A) H).
double relative_functional(const RelativeFunctionalInput& input);

/// phi(A_1,...,A_k) = Tr exp_q(sum H_i* log_q(A_i) H_i).
double phi_multi(const MultiTermInput& input);

/// Tr X^(2-q) L - Tr X^(2-q) log_q X for a density matrix X.
double gibbs_objective(const PositiveDefiniteMatrix& x, const HermitianMatrix& l,
                       DeformationParameter q);

/// Tr X^(2-q) log_q X.
double tsallis_entropy_functional(const PositiveDefiniteMatrix& x, DeformationParameter q);

// Spectral building blocks shared by the functionals and the verifiers.
namespace detail {

/// Tr X^p log_q X from the spectrum alone.
double entropy_term(const SpectralDecomposition& x, double p, DeformationParameter q);

/// Tr X^p C for Hermitian C.
double weighted_trace(const SpectralDecomposition& x, double p, const Matrix& c);

/// H* M H for the contraction/isometry sandwich.
Matrix sandwich(const ContractionMatrix& h, const Matrix& m);

/// sum H_i* log_q(A_i) H_i.
Matrix multi_sandwich_log(const MultiTermInput& input);

}  // namespace detail

}  // namespace qtrace
