#include <sig4/hypergeom.hpp>
#include <sig4/jacobi.hpp>
#include <sig4/weierstrass.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>

namespace sig4::weierstrass
{

namespace
{

double polish_root(double w, double g2, double g3)
{
    const double p = 4 * w * w * w - g2 * w - g3;
    const double dp = 12 * w * w - g2;
    return dp != 0 ? w - p / dp : w;
}

} // namespace

LatticeData lattice_from_invariants(double g2, double g3)
{
    const double delta = g2 * g2 * g2 - 27 * g3 * g3;
    if (!(delta > 0) || !(g2 > 0)) {
        throw DomainError("lattice_from_invariants: need g2^3 - 27 g3^2 > 0 (rectangular lattice)");
    }
    // Trigonometric solution of w^3 - (g2/4) w - g3/4 = 0.
    const double r = 2 * std::sqrt(g2 / 12);
    const double arg = std::clamp(3 * g3 / (2 * g2) * std::sqrt(12 / g2), -1.0, 1.0);
    const double theta = std::acos(arg) / 3;
    constexpr double third_turn = 2 * std::numbers::pi / 3;
    std::array<double, 3> e{r * std::cos(theta), r * std::cos(theta - third_turn),
                            r * std::cos(theta + third_turn)};
    for (double &root : e) {
        root = polish_root(root, g2, g3);
    }
    std::sort(e.begin(), e.end(), std::greater<>());

    LatticeData lat{g2, g3, delta, e[0], e[1], e[2], 0, 0};
    lat.m = (lat.e2 - lat.e3) / (lat.e1 - lat.e3);
    lat.scale = std::sqrt(lat.e1 - lat.e3);
    return lat;
}

LatticeData lattice_from_roots(double e1, double e2, double e3)
{
    if (!(e1 > e2 && e2 > e3)) {
        throw DomainError("lattice_from_roots: need e1 > e2 > e3");
    }
    const double g2 = -4 * (e1 * e2 + e1 * e3 + e2 * e3);
    const double g3 = 4 * e1 * e2 * e3;
    const double gaps = (e1 - e2) * (e1 - e3) * (e2 - e3);
    return {g2, g3, 16 * gaps * gaps, e1, e2, e3, (e2 - e3) / (e1 - e3), std::sqrt(e1 - e3)};
}

PoleOr<CPoint> wp(CPoint z, const LatticeData &lat)
{
    return wp_minus(z, lat, 0);
}

PoleOr<CPoint> wp_minus(CPoint z, const LatticeData &lat, double c)
{
    const auto jac = jacobi::jacobi_complex(z * lat.scale, lat.m);
    if (!jac) {
        // sn has a pole there, so wp sits at e3.
        return CPoint(lat.e3 - c, 0);
    }
    const CPoint sn2 = jac->sn * jac->sn;
    if (std::abs(sn2) < pole_threshold) {
        return std::nullopt;
    }
    return (lat.e3 - c) + (lat.e1 - lat.e3) / sn2;
}

PeriodPair wp_halfperiods(const LatticeData &lat)
{
    return {hypergeom::complete_K(lat.m) / lat.scale, hypergeom::complete_K(1 - lat.m) / lat.scale};
}

} // namespace sig4::weierstrass
