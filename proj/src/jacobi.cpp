#include <sig4/hypergeom.hpp>
#include <sig4/jacobi.hpp>

#include <array>
#include <cmath>
#include <limits>

namespace sig4::jacobi
{

namespace
{

constexpr int max_landen = 16;

void check_parameter(double m)
{
    if (!(m >= 0 && m < 1)) {
        throw DomainError("jacobi: parameter m must lie in [0, 1)");
    }
}

} // namespace

JacobiTriple jacobi_real(double x, double m)
{
    check_parameter(m);
    if (!std::isfinite(x)) {
        throw DomainError("jacobi_real: non-finite argument");
    }
    if (m == 0) {
        return {std::sin(x), std::cos(x), 1};
    }

    const double period = 4 * hypergeom::complete_K(m);
    x = std::fmod(x, period);
    if (x > period / 2) {
        x -= period;
    } else if (x < -period / 2) {
        x += period;
    }

    std::array<double, max_landen + 1> a{}, c{};
    a[0] = 1;
    c[0] = std::sqrt(m);
    double b = std::sqrt(1 - m);
    int n = 0;
    while (n < max_landen && std::abs(c[n]) > std::numeric_limits<double>::epsilon() * a[n]) {
        a[n + 1] = (a[n] + b) / 2;
        c[n + 1] = (a[n] - b) / 2;
        b = std::sqrt(a[n] * b);
        ++n;
    }

    double phi = std::ldexp(a[n] * x, n);
    for (int j = n; j > 0; --j) {
        phi = (phi + std::asin(c[j] / a[j] * std::sin(phi))) / 2;
    }
    const double sn = std::sin(phi);
    return {sn, std::cos(phi), std::sqrt(1 - m * sn * sn)};
}

PoleOr<ComplexJacobiTriple> jacobi_complex(CPoint z, double m)
{
    check_parameter(m);
    if (m == 0) {
        // sin, cos are entire; dn = 1.
        return ComplexJacobiTriple{std::sin(z), std::cos(z), CPoint(1, 0)};
    }
    const auto [s, c, d] = jacobi_real(z.real(), m);
    const auto [s1, c1, d1] = jacobi_real(z.imag(), 1 - m);

    const double den = c1 * c1 + m * s * s * s1 * s1;
    if (std::abs(den) < pole_threshold) {
        return std::nullopt;
    }
    return ComplexJacobiTriple{
        CPoint(s * d1, c * d * s1 * c1) / den,
        CPoint(c * c1, -s * d * s1 * d1) / den,
        CPoint(d * c1 * d1, -m * s * c * s1) / den,
    };
}

} // namespace sig4::jacobi
