#ifndef SIG4_IDENTITIES_HPP
#define SIG4_IDENTITIES_HPP

// Residual evaluators for the hypergeometric identities tying F(1/4, 3/4; 1; .)
// to the classical F(1/2, 1/2; 1; .), and for the relations between the
// half-periods of complementary moduli. Residuals are always lhs - rhs.
//
// The rhs_shift argument offsets the parameter seen by the right-hand side
// only; it exists so that tests can confirm a perturbation is detected.

#include <string>
#include <vector>

namespace sig4::identities
{

inline constexpr double hyper_identity_tol = 1e-12;
inline constexpr double transformation_tol = 1e-11;
inline constexpr double period_relation_tol = 1e-12;

struct ResidualReport {
    std::string name;
    double parameter;
    double lhs;
    double rhs;
    double residual;
    double tol;
    bool pass;
};

ResidualReport make_report(std::string name, double parameter, double lhs, double rhs, double tol);

// F(1/4, 3/4; 1; 1 - lambda^2) = sqrt(2/(1+lambda)) F(1/2, 1/2; 1; (1-lambda)/(1+lambda))
// (both sides are (2/pi) K for the modulus with complement lambda).
ResidualReport k_identity(double lambda, double rhs_shift = 0);

// F(1/4, 3/4; 1; lambda^2) = sqrt(1/(1+lambda)) F(1/2, 1/2; 1; 2 lambda/(1+lambda))
ResidualReport kprime_identity(double lambda, double rhs_shift = 0);

// sqrt(1 + 3x) F(1/4, 3/4; 1; x^2) = F(1/4, 3/4; 1; 1 - ((1-x)/(1+3x))^2), 0 < x < 1.
ResidualReport transformation_law(double x, double rhs_shift = 0);

// y = (1 - x)/(1 + 3x); the relation x + y + 3xy = 1 is symmetric, so this
// map is an involution of [0, 1] with fixed point 1/3.
double symmetric_pair(double x);

// Four reports from the elliptic period method, for kappa and its
// complement lambda:
//   K'(kappa) = sqrt2 K(lambda), K'(lambda) = sqrt2 K(kappa),
//   K(kappa) K'(kappa) = K(lambda) K'(lambda),
//   (K'/K)(kappa) (K'/K)(lambda) = 2.
std::vector<ResidualReport> period_relations(double kappa, double rhs_shift = 0);

} // namespace sig4::identities

#endif
