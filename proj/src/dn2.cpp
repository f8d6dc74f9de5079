#include <sig4/dn2.hpp>
#include <sig4/hypergeom.hpp>
#include <sig4/jacobi.hpp>

#include <cmath>
#include <numbers>

namespace sig4::dn2
{

namespace
{

constexpr double forward_quad_tol = 1e-15;
constexpr double phi_newton_tol = 1e-14;
constexpr double period_quad_tol = 1e-14;

double forward_integrand(double t, double kappa)
{
    const double s = kappa * std::sin(t);
    return hypergeom::f14_34_12_closed(s * s);
}

} // namespace

Modulus::Modulus(double kappa) : kappa_(kappa)
{
    if (!(kappa > 0 && kappa < 1)) {
        throw DomainError("Modulus: kappa must lie in (0, 1)");
    }
    lambda_ = std::sqrt((1 - kappa) * (1 + kappa));
    alpha_ = std::acos(kappa);
    beta_ = std::asin(kappa);
}

std::string_view to_string(Route r)
{
    switch (r) {
        case Route::sn:
            return "sn";
        case Route::wp:
            return "wp";
        case Route::phi:
            return "phi";
    }
    return "?";
}

std::string_view to_string(PeriodMethod m)
{
    switch (m) {
        case PeriodMethod::integral:
            return "integral";
        case PeriodMethod::elliptic:
            return "elliptic";
        case PeriodMethod::hyper:
            return "hyper";
    }
    return "?";
}

weierstrass::LatticeData invariants_of(const Modulus &mod)
{
    // 4w^3 - g2 w - g3 factors as 4(w + 1/3)(w - 1/6 - lambda/2)(w - 1/6 + lambda/2).
    const double lambda = mod.lambda();
    const double k2 = mod.kappa() * mod.kappa();
    auto lat = weierstrass::lattice_from_roots(1.0 / 6 + lambda / 2, -1.0 / 3 + mod.one_minus_lambda() / 2, -1.0 / 3);
    lat.g2 = 4.0 / 3 - k2;
    lat.g3 = 8.0 / 27 - k2 / 3;
    lat.m = mod.jacobi_parameter();
    lat.scale = std::sqrt((1 + lambda) / 2);
    return lat;
}

PoleOr<CPoint> dn2(CPoint z, const Modulus &mod, Route route)
{
    const double lambda = mod.lambda();
    switch (route) {
        case Route::sn: {
            const auto jac = jacobi::jacobi_complex(z * std::sqrt((1 + lambda) / 2), mod.jacobi_parameter());
            if (!jac) {
                return std::nullopt;
            }
            return 1.0 - mod.one_minus_lambda() * jac->sn * jac->sn;
        }
        case Route::wp: {
            // 1/3 + wp, taken from the lattice directly: near the poles of
            // dn2 wp approaches -1/3 and a plain sum would cancel.
            const auto shifted = weierstrass::wp_minus(z, invariants_of(mod), -1.0 / 3);
            if (!shifted) {
                // Lattice point of wp: dn2 = 1 there.
                return CPoint(1, 0);
            }
            if (std::abs(*shifted) < pole_threshold) {
                return std::nullopt;
            }
            return 1.0 - mod.kappa() * mod.kappa() / 2 / *shifted;
        }
        case Route::phi: {
            if (z.imag() != 0) {
                throw DomainError("dn2: the phi route is defined on the real axis only");
            }
            const double ks = mod.kappa() * std::sin(phi(z.real(), mod));
            // psi stays in (-pi/2, pi/2) on the real line, so cos psi > 0.
            return CPoint(std::sqrt((1 - ks) * (1 + ks)), 0);
        }
    }
    throw DomainError("dn2: unknown route");
}

double dn2_derivative(double x, const Modulus &mod)
{
    const double lambda = mod.lambda();
    const double scale = std::sqrt((1 + lambda) / 2);
    const auto [s, c, d] = jacobi::jacobi_real(x * scale, mod.jacobi_parameter());
    return -2 * mod.one_minus_lambda() * scale * s * c * d;
}

double f_forward(double T, const Modulus &mod)
{
    if (!std::isfinite(T)) {
        throw DomainError("f_forward: non-finite argument");
    }
    if (T == 0) {
        return 0;
    }
    const double kappa = mod.kappa();
    const double len = std::abs(T);
    const double v =
        integrate([kappa](double t) { return forward_integrand(t, kappa); }, 0, len, false, false,
                  forward_quad_tol)
            .value;
    return T < 0 ? -v : v;
}

double phi(double u, const Modulus &mod)
{
    if (!std::isfinite(u)) {
        throw DomainError("phi: non-finite argument");
    }
    const double K = periods(mod, PeriodMethod::elliptic).K;
    const double turns = std::round(u / (2 * K));
    const double r = u - turns * 2 * K;
    const double kappa = mod.kappa();
    const double t = newton_invert([&mod](double x) { return f_forward(x, mod); },
                                   [kappa](double x) { return forward_integrand(x, kappa); }, r, r,
                                   phi_newton_tol, Bracket{-std::numbers::pi / 2, std::numbers::pi / 2});
    return turns * std::numbers::pi + t;
}

double s2(double x, const Modulus &mod)
{
    return std::sin(phi(x, mod));
}

double i_gamma(double gamma)
{
    if (!(gamma > 0 && gamma < std::numbers::pi / 2)) {
        throw DomainError("i_gamma: require 0 < gamma < pi/2");
    }
    // cos^2 t - cos^2 gamma = sin(gamma + t) sin(gamma - t)
    auto integrand = [gamma](const Abscissa &n) {
        return std::cos(n.x / 2) / std::sqrt(std::sin(gamma + n.x) * std::sin(n.to_right));
    };
    return integrate(integrand, 0, gamma, false, true, period_quad_tol).value;
}

PeriodPair periods(const Modulus &mod, PeriodMethod method)
{
    const double lambda = mod.lambda();
    switch (method) {
        case PeriodMethod::integral:
            return {i_gamma(mod.beta()), std::numbers::sqrt2 * i_gamma(mod.alpha())};
        case PeriodMethod::elliptic: {
            const double s = std::sqrt(2 / (1 + lambda));
            return {s * hypergeom::complete_K(mod.jacobi_parameter()),
                    s * hypergeom::complete_K(2 * lambda / (1 + lambda))};
        }
        case PeriodMethod::hyper: {
            const hypergeom::HyperParams p(0.25, 0.75, 1);
            const double kappa = mod.kappa();
            return {std::numbers::pi / 2 * hypergeom::gauss_2f1(p, kappa * kappa),
                    std::numbers::sqrt2 * std::numbers::pi / 2 * hypergeom::gauss_2f1(p, lambda * lambda)};
        }
    }
    throw DomainError("periods: unknown method");
}

CubicResiduals cubic_reduction_check(double a, double b, double c)
{
    if (!(a > b && b > c)) {
        throw DomainError("cubic_reduction_check: require a > b > c");
    }
    auto upper_integrand = [b, c](const Abscissa &n) {
        return 1 / std::sqrt(n.to_right * n.to_left * (n.to_left + (b - c)));
    };
    auto lower_integrand = [a, b](const Abscissa &n) {
        return 1 / std::sqrt(((a - b) + n.to_right) * n.to_right * n.to_left);
    };
    const double upper = integrate(upper_integrand, b, a, true, true, period_quad_tol).value;
    const double lower = integrate(lower_integrand, c, b, true, true, period_quad_tol).value;
    const double pref = 2 / std::sqrt(a - c);
    return {upper - pref * hypergeom::complete_K((a - b) / (a - c)),
            lower - pref * hypergeom::complete_K((b - c) / (a - c))};
}

} // namespace sig4::dn2
