#include "qtrace/deformed.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qtrace {

double log_q_scalar(double x, DeformationParameter q) {
    if (!(x > 0.0)) {
        std::ostringstream oss;
        oss << "log_q undefined at x = " << x << " (requires x > 0)";
        throw DomainError(oss.str());
    }
    if (q.is_classical()) return std::log(x);
    // (x^(q-1) - 1)/(q-1) through expm1 keeps full precision near x = 1 and
    // for q close to (but outside) the classical window.
    return std::expm1((q.q() - 1.0) * std::log(x)) / (q.q() - 1.0);
}

double exp_q_scalar(double x, DeformationParameter q) {
    if (q.is_classical()) return std::exp(x);
    const ExpQDomain domain{q};
    if (!domain.contains(x)) {
        std::ostringstream oss;
        oss << "exp_q undefined at x = " << x << ": spectrum must lie strictly "
            << (domain.side == DomainSide::Above ? "below" : "above") << " -1/(q-1) = "
            << domain.bound << " for q = " << q.q();
        throw DomainError(oss.str());
    }
    // (1 + (q-1)x)^(1/(q-1)) = exp(log1p((q-1)x)/(q-1)).
    return std::exp(std::log1p((q.q() - 1.0) * x) / (q.q() - 1.0));
}

double log_q_prime_scalar(double x, DeformationParameter q) {
    if (!(x > 0.0)) throw DomainError("log_q' undefined for x <= 0");
    return std::exp((q.q() - 2.0) * std::log(x));
}

HermitianMatrix log_q_matrix(const PositiveDefiniteMatrix& a, DeformationParameter q) {
    return HermitianMatrix(a.spectral().apply([q](double x) { return log_q_scalar(x, q); }));
}

PositiveDefiniteMatrix exp_q_matrix(const HermitianMatrix& l, DeformationParameter q) {
    const SpectralDecomposition sd = eigh(l);
    const DomainReport report = check_exp_q_domain(sd, q);
    if (!report.ok) {
        const double offender =
            (!q.is_classical() && q.q() < 1.0) ? report.max_eig : report.min_eig;
        std::ostringstream oss;
        oss << "exp_q domain violation: eigenvalue " << offender << " vs bound " << report.bound
            << " for q = " << q.q();
        throw DomainError(oss.str());
    }
    RealVector mapped(sd.dim());
    for (int i = 0; i < sd.dim(); ++i) mapped(i) = exp_q_scalar(sd.eigenvalues()(i), q);
    // exp_q is increasing on its domain, so the mapped values stay sorted.
    return PositiveDefiniteMatrix(mapped, sd.eigenvectors());
}

DomainReport check_exp_q_domain(const SpectralDecomposition& sd, DeformationParameter q) {
    DomainReport report;
    report.min_eig = sd.min_eigenvalue();
    report.max_eig = sd.max_eigenvalue();
    if (q.is_classical()) {
        report.ok = true;
        report.margin = std::numeric_limits<double>::infinity();
        return report;
    }
    const ExpQDomain domain{q};
    report.bound = domain.bound;
    report.margin = domain.side == DomainSide::Above ? domain.bound - report.max_eig
                                                     : report.min_eig - domain.bound;
    report.ok = report.margin > tol::domain_margin;
    return report;
}

DomainReport check_exp_q_domain(const HermitianMatrix& l, DeformationParameter q) {
    return check_exp_q_domain(eigh(l), q);
}

}  // namespace qtrace
