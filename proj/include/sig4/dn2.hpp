#ifndef SIG4_DN2_HPP
#define SIG4_DN2_HPP

// The signature-four elliptic function dn2 for a modulus kappa in (0, 1):
// evaluation by three independent routes, the companion s2 = sin(phi), the
// amplitude phi, and the half-periods K, K' by three independent methods.
//
// Routes:
//   sn   dn2(z) = 1 - (1 - lambda) sn^2(z sqrt((1 + lambda)/2)), m = (1-lambda)/(1+lambda)
//   wp   dn2(z) = 1 - (kappa^2 / 2) / (1/3 + wp(z)), g2 = 4/3 - kappa^2, g3 = 8/27 - kappa^2/3
//   phi  dn2(x) = cos(psi), sin(psi) = kappa sin(phi(x)); real x only
//
// Period methods:
//   integral  K = I(beta), K' = sqrt(2) I(alpha)
//   elliptic  K, K' = sqrt(2/(1+lambda)) K((1-lambda)/(1+lambda)), ... K(2 lambda/(1+lambda))
//   hyper     K = (pi/2) F(1/4, 3/4; 1; kappa^2), K' = sqrt(2) (pi/2) F(1/4, 3/4; 1; lambda^2)

#include <sig4/numeric.hpp>
#include <sig4/weierstrass.hpp>

#include <string_view>

namespace sig4::dn2
{

// kappa together with lambda = sqrt(1 - kappa^2) and the complementary
// acute angles alpha = arccos(kappa), beta = arccos(lambda).
class Modulus
{
public:
    // Throws DomainError unless 0 < kappa < 1.
    explicit Modulus(double kappa);

    double kappa() const noexcept
    {
        return kappa_;
    }
    double lambda() const noexcept
    {
        return lambda_;
    }
    double alpha() const noexcept
    {
        return alpha_;
    }
    double beta() const noexcept
    {
        return beta_;
    }
    // The modulus with kappa and lambda exchanged.
    Modulus complement() const
    {
        return Modulus(lambda_);
    }
    // 1 - lambda, written as kappa^2 / (1 + lambda) to avoid cancellation.
    double one_minus_lambda() const noexcept
    {
        return kappa_ * kappa_ / (1 + lambda_);
    }
    // Jacobian parameter (1 - lambda) / (1 + lambda) of the sn route.
    double jacobi_parameter() const noexcept
    {
        return one_minus_lambda() / (1 + lambda_);
    }

private:
    double kappa_, lambda_, alpha_, beta_;
};

enum class Route { sn, wp, phi };
enum class PeriodMethod { integral, elliptic, hyper };

std::string_view to_string(Route r);
std::string_view to_string(PeriodMethod m);

// |1/3 + wp| (wp route) below which dn2 is reported as a pole. The sn route
// uses the jacobi module's denominator threshold of the same size.
inline constexpr double pole_threshold = 1e-13;

// Coperiodic Weierstrass lattice: g2 = 4/3 - kappa^2, g3 = 8/27 - kappa^2/3.
weierstrass::LatticeData invariants_of(const Modulus &mod);

// Empty result at the double pole z = iK' (mod lattice). Route::phi throws
// DomainError for non-real z.
PoleOr<CPoint> dn2(CPoint z, const Modulus &mod, Route route);

// Derivative on the real axis through the sn-route chain rule,
// -2 (1 - lambda) sqrt((1 + lambda)/2) sn cn dn.
double dn2_derivative(double x, const Modulus &mod);

// f(T) = integral_0^T F(1/4, 3/4; 1/2; kappa^2 sin^2 t) dt.
double f_forward(double T, const Modulus &mod);

// Inverse of f_forward on the real line. The argument is reduced with
// f(T + pi) = f(T) + 2K before a bracketed Newton solve on [-pi/2, pi/2].
double phi(double u, const Modulus &mod);

// sin(phi(x)).
double s2(double x, const Modulus &mod);

// I(gamma) = integral_0^gamma cos(t/2) / sqrt(cos^2 t - cos^2 gamma) dt,
// 0 < gamma < pi/2.
double i_gamma(double gamma);

PeriodPair periods(const Modulus &mod, PeriodMethod method);

// Residuals (quadrature minus complete-K closed form) of the two cubic
// reductions for T = (t - a)(t - b)(t - c), a > b > c:
//   upper: integral_b^a dt / sqrt(-T) - 2/sqrt(a-c) K((a-b)/(a-c))
//   lower: integral_c^b dt / sqrt(T)  - 2/sqrt(a-c) K((b-c)/(a-c))
struct CubicResiduals {
    double upper;
    double lower;
};
CubicResiduals cubic_reduction_check(double a, double b, double c);

} // namespace sig4::dn2

#endif
