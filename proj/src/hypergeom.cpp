#include <sig4/hypergeom.hpp>
#include <sig4/numeric.hpp>

#include <boost/math/special_functions/digamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace sig4::hypergeom
{

namespace
{

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr std::size_t max_terms = 20000;
// Direct summation limit for families without a connection formula.
constexpr double positive_series_limit = 0.95;
// Absolute tail target; every family used here has F >= 1.
constexpr double series_tol = 1e-17;

bool nonpositive_integer(double c)
{
    return c <= 0 && c == std::floor(c);
}

// F(a, b; a + b; x) = Gamma(a+b) / (Gamma(a) Gamma(b))
//   * sum_n (a)_n (b)_n / (n!)^2 [2 psi(n+1) - psi(a+n) - psi(b+n) - ln(1-x)] (1-x)^n
double zero_balanced_connection(double a, double b, double x)
{
    const double w = 1 - x;
    const double log_w = std::log1p(-x);
    double coef = 1;
    double psi_n1 = boost::math::digamma(1.0);
    double psi_an = boost::math::digamma(a);
    double psi_bn = boost::math::digamma(b);

    auto term = [&](std::size_t n) {
        if (n > 0) {
            const double k = static_cast<double>(n - 1);
            coef *= (a + k) * (b + k) / ((k + 1) * (k + 1)) * w;
            psi_n1 += 1 / (k + 1);
            psi_an += 1 / (a + k);
            psi_bn += 1 / (b + k);
        }
        return coef * (2 * psi_n1 - psi_an - psi_bn - log_w);
    };
    const double s = sum_series(term, series_tol, max_terms);
    return std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b)) * s;
}

} // namespace

HyperParams::HyperParams(double a, double b, double c) : a_(a), b_(b), c_(c)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || nonpositive_integer(c)) {
        throw DomainError("HyperParams: c must not be zero or a negative integer");
    }
}

double gauss_2f1_series(const HyperParams &p, double x)
{
    if (!(x >= 0 && x < 1)) {
        throw DomainError("gauss_2f1: require 0 <= x < 1");
    }
    double t = 1;
    auto term = [&](std::size_t n) {
        if (n > 0) {
            const double k = static_cast<double>(n - 1);
            t *= (p.a() + k) * (p.b() + k) / ((p.c() + k) * (k + 1)) * x;
        }
        return t;
    };
    return sum_series(term, series_tol, max_terms);
}

double gauss_2f1(const HyperParams &p, double x)
{
    if (!(x >= 0 && x < 1)) {
        throw DomainError("gauss_2f1: require 0 <= x < 1");
    }
    if (x == 0) {
        return 1;
    }
    if (x <= connection_cutover) {
        return gauss_2f1_series(p, x);
    }
    const double excess = p.c() - p.a() - p.b();
    if (std::abs(excess) <= 4 * eps * std::abs(p.c())) {
        if (p.a() <= 0 || p.b() <= 0) {
            throw DomainError("gauss_2f1: connection formula needs a, b > 0");
        }
        return zero_balanced_connection(p.a(), p.b(), x);
    }
    if (p.a() > 0 && p.b() > 0 && p.c() > 0 && x <= positive_series_limit) {
        return gauss_2f1_series(p, x);
    }
    throw DomainError("gauss_2f1: no accurate evaluation path for these parameters near x = 1");
}

double f14_34_12_closed(double u)
{
    if (!(u >= 0 && u < 1)) {
        throw DomainError("f14_34_12_closed: require 0 <= u < 1");
    }
    const double cos_psi = std::sqrt(1 - u);
    return std::sqrt((1 + cos_psi) / 2) / cos_psi;
}

double agm(double a, double b)
{
    if (!(a > 0 && b > 0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("agm: require positive finite arguments");
    }
    for (int i = 0; i < 64; ++i) {
        if (std::abs(a - b) <= 1e-15 * a) {
            break;
        }
        const double an = (a + b) / 2;
        b = std::sqrt(a * b);
        a = an;
    }
    return (a + b) / 2;
}

double complete_K(double m)
{
    if (!(m >= 0 && m < 1)) {
        throw DomainError("complete_K: require 0 <= m < 1");
    }
    return std::numbers::pi / (2 * agm(1, std::sqrt(1 - m)));
}

} // namespace sig4::hypergeom
