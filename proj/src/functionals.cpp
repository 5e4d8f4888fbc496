#include "qtrace/functionals.hpp"

#include <cmath>
#include <sstream>

namespace qtrace {

namespace detail {

double entropy_term(const SpectralDecomposition& x, double p, DeformationParameter q) {
    double sum = 0.0;
    for (int i = 0; i < x.dim(); ++i) {
        const double lambda = x.eigenvalues()(i);
        sum += std::exp(p * std::log(lambda)) * log_q_scalar(lambda, q);
    }
    return sum;
}

double weighted_trace(const SpectralDecomposition& x, double p, const Matrix& c) {
    return x.trace_of_times([p](double lambda) { return std::exp(p * std::log(lambda)); }, c);
}

Matrix sandwich(const ContractionMatrix& h, const Matrix& m) {
    if (m.rows() != h.rows()) throw DomainError("sandwich: H and M dimensions mismatch");
    return h.entries().adjoint() * m * h.entries();
}

Matrix multi_sandwich_log(const MultiTermInput& input) {
    const int cols = input.h_list.front().cols();
    Matrix sum = Matrix::Zero(cols, cols);
    for (int i = 0; i < input.k(); ++i)
        sum += sandwich(input.h_list[i], log_q_matrix(input.a_list[i], input.q).entries());
    return sum;
}

}  // namespace detail

void RelativeFunctionalInput::validate() const {
    if (h.rows() != a.dim() || h.cols() != x.dim())
        throw DomainError("relative functional: H must map the space of X into the space of A");
}

void MultiTermInput::validate() const {
    if (a_list.empty() || a_list.size() != h_list.size())
        throw DomainError("multi-term input: need k >= 1 matched (A_i, H_i) pairs");
    const int cols = h_list.front().cols();
    Matrix gram = Matrix::Zero(cols, cols);
    for (std::size_t i = 0; i < h_list.size(); ++i) {
        if (h_list[i].cols() != cols) throw DomainError("multi-term input: H_i column mismatch");
        if (h_list[i].rows() != a_list[i].dim())
            throw DomainError("multi-term input: H_i rows must match dim(A_i)");
        gram += h_list[i].entries().adjoint() * h_list[i].entries();
    }
    const double defect = (gram - Matrix::Identity(cols, cols)).cwiseAbs().maxCoeff();
    if (defect > tol::spectral_roundtrip) {
        std::ostringstream oss;
        oss << "multi-term input: sum H_i* H_i deviates from identity by " << defect;
        throw DomainError(oss.str());
    }
}

double tsallis_relative_entropy(const PositiveDefiniteMatrix& x, const PositiveDefiniteMatrix& y,
                                double p) {
    if (x.dim() != y.dim()) throw DomainError("tsallis_relative_entropy: dimension mismatch");
    if (p < 0.0 || p > 1.0)
        throw DomainError("tsallis_relative_entropy: p must lie in [0, 1]");
    if (std::abs(p - 1.0) <= tol::p_one) {
        // Umegaki relative entropy Tr X (log X - log Y).
        const DeformationParameter q1{1.0};
        const double h_x = detail::entropy_term(x.spectral(), 1.0, q1);
        const Matrix log_y = log_q_matrix(y, q1).entries();
        return h_x - detail::weighted_trace(x.spectral(), 1.0, log_y);
    }
    const Matrix x_p = x.spectral().apply([p](double v) { return std::exp(p * std::log(v)); });
    const Matrix y_1mp =
        y.spectral().apply([p](double v) { return std::exp((1.0 - p) * std::log(v)); });
    return (x.trace() - real_trace_product(x_p, y_1mp)) / (1.0 - p);
}

double relative_functional(const RelativeFunctionalInput& input) {
    input.validate();
    const double p = 2.0 - input.q.q();
    const Matrix target = detail::sandwich(input.h, log_q_matrix(input.a, input.q).entries());
    return detail::entropy_term(input.x.spectral(), p, input.q) -
           detail::weighted_trace(input.x.spectral(), p, target);
}

double phi_multi(const MultiTermInput& input) {
    input.validate();
    const HermitianMatrix exponent{detail::multi_sandwich_log(input)};
    return exp_q_matrix(exponent, input.q).trace();
}

double gibbs_objective(const PositiveDefiniteMatrix& x, const HermitianMatrix& l,
                       DeformationParameter q) {
    if (x.dim() != l.dim()) throw DomainError("gibbs_objective: dimension mismatch");
    if (std::abs(x.trace() - 1.0) > 1e-10) {
        std::ostringstream oss;
        oss << "gibbs_objective: Tr X = " << x.trace() << " deviates from 1";
        throw NotADensityMatrix(oss.str());
    }
    const DomainReport report = check_exp_q_domain(l, q);
    if (!report.ok) throw DomainError("gibbs_objective: L outside the exp_q domain");
    const double p = 2.0 - q.q();
    return detail::weighted_trace(x.spectral(), p, l.entries()) -
           detail::entropy_term(x.spectral(), p, q);
}

double tsallis_entropy_functional(const PositiveDefiniteMatrix& x, DeformationParameter q) {
    return detail::entropy_term(x.spectral(), 2.0 - q.q(), q);
}

}  // namespace qtrace
