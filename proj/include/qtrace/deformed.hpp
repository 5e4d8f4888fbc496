#pragma once

#include "qtrace/matrix.hpp"
#include "qtrace/tolerances.hpp"

namespace qtrace {

enum class QRegime { SubOne, One, OneToTwo, TwoToThree, AboveThree };

/// Deformation parameter q with its regime classification. The regime
/// drives domain rules (which side of -1/(q-1) the spectrum must lie on)
/// and the max/min direction of every variational representation.
class DeformationParameter {
public:
    explicit DeformationParameter(double q) : q_(q) {
        if (std::abs(q - 1.0) <= tol::q_one)
            regime_ = QRegime::One;
        else if (q < 1.0)
            regime_ = QRegime::SubOne;
        else if (q <= 2.0)
            regime_ = QRegime::OneToTwo;
        else if (q <= 3.0)
            regime_ = QRegime::TwoToThree;
        else
            regime_ = QRegime::AboveThree;
    }

    double q() const { return q_; }
    QRegime regime() const { return regime_; }
    bool is_classical() const { return regime_ == QRegime::One; }

    /// The exp_q domain boundary -1/(q-1); only meaningful off the q=1 regime.
    double bound() const { return -1.0 / (q_ - 1.0); }

private:
    double q_;
    QRegime regime_;
};

enum class DomainSide { Above, Below, All };

/// Domain of exp_q: the half line on the regime's side of -1/(q-1), or all
/// of R in the classical regime.
struct ExpQDomain {
    explicit ExpQDomain(DeformationParameter q)
        : q(q),
          side(q.is_classical() ? DomainSide::All
                                : (q.q() > 1.0 ? DomainSide::Below : DomainSide::Above)),
          bound(q.is_classical() ? 0.0 : q.bound()) {}

    /// True when x is strictly inside with the standard margin. The side
    /// names the position of the bound relative to the admissible half line:
    /// Above means the spectrum must lie strictly below the bound (q < 1).
    bool contains(double x, double margin = tol::domain_margin) const {
        switch (side) {
            case DomainSide::All: return true;
            case DomainSide::Above: return x < bound - margin;
            case DomainSide::Below: return x > bound + margin;
        }
        return false;
    }

    DeformationParameter q;
    DomainSide side;
    double bound;
};

struct DomainReport {
    bool ok = true;
    double min_eig = 0.0;
    double max_eig = 0.0;
    double bound = 0.0;   // NaN-free: 0 in the classical regime
    double margin = 0.0;  // distance from the spectrum to the bound
};

double log_q_scalar(double x, DeformationParameter q);
double exp_q_scalar(double x, DeformationParameter q);

/// Derivative of log_q, i.e. x^(q-2); pairs with log_q in the Frechet
/// derivative calls.
double log_q_prime_scalar(double x, DeformationParameter q);

HermitianMatrix log_q_matrix(const PositiveDefiniteMatrix& a, DeformationParameter q);
PositiveDefiniteMatrix exp_q_matrix(const HermitianMatrix& l, DeformationParameter q);

/// Spectral domain check for exp_q(L); reports the spectrum range and the
/// distance to the bound. Never throws.
DomainReport check_exp_q_domain(const HermitianMatrix& l, DeformationParameter q);
DomainReport check_exp_q_domain(const SpectralDecomposition& sd, DeformationParameter q);

}  // namespace qtrace
