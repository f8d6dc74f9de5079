#include <sig4/dn2.hpp>
#include <sig4/hypergeom.hpp>
#include <sig4/identities.hpp>
#include <sig4/numeric.hpp>

#include <cmath>
#include <numbers>
#include <utility>

namespace sig4::identities
{

namespace
{

const hypergeom::HyperParams sig4_params(0.25, 0.75, 1);
const hypergeom::HyperParams classical_params(0.5, 0.5, 1);

void check_open_unit(double v, const char *what)
{
    if (!(v > 0 && v < 1)) {
        throw DomainError(std::string(what) + ": parameter must lie in (0, 1)");
    }
}

} // namespace

ResidualReport make_report(std::string name, double parameter, double lhs, double rhs, double tol)
{
    const double residual = lhs - rhs;
    return {std::move(name), parameter, lhs, rhs, residual, tol, std::abs(residual) <= tol};
}

ResidualReport k_identity(double lambda, double rhs_shift)
{
    check_open_unit(lambda, "k_identity");
    // 1 - lambda^2 formed as a product to keep digits for small lambda.
    const double lhs = hypergeom::gauss_2f1(sig4_params, (1 - lambda) * (1 + lambda));
    const double l = lambda + rhs_shift;
    const double rhs = std::sqrt(2 / (1 + l)) * hypergeom::gauss_2f1(classical_params, (1 - l) / (1 + l));
    return make_report("k_identity", lambda, lhs, rhs, hyper_identity_tol);
}

ResidualReport kprime_identity(double lambda, double rhs_shift)
{
    check_open_unit(lambda, "kprime_identity");
    const double lhs = hypergeom::gauss_2f1(sig4_params, lambda * lambda);
    const double l = lambda + rhs_shift;
    const double rhs = std::sqrt(1 / (1 + l)) * hypergeom::gauss_2f1(classical_params, 2 * l / (1 + l));
    return make_report("kprime_identity", lambda, lhs, rhs, hyper_identity_tol);
}

ResidualReport transformation_law(double x, double rhs_shift)
{
    check_open_unit(x, "transformation_law");
    const double lhs = std::sqrt(1 + 3 * x) * hypergeom::gauss_2f1(sig4_params, x * x);
    const double y = symmetric_pair(x + rhs_shift);
    const double rhs = hypergeom::gauss_2f1(sig4_params, (1 - y) * (1 + y));
    return make_report("transformation_law", x, lhs, rhs, transformation_tol);
}

double symmetric_pair(double x)
{
    if (!(x >= 0 && x <= 1)) {
        throw DomainError("symmetric_pair: x must lie in [0, 1]");
    }
    return (1 - x) / (1 + 3 * x);
}

std::vector<ResidualReport> period_relations(double kappa, double rhs_shift)
{
    check_open_unit(kappa, "period_relations");
    const dn2::Modulus mk(kappa);
    const dn2::Modulus ml(mk.lambda() + rhs_shift);
    const auto pk = dn2::periods(mk, dn2::PeriodMethod::elliptic);
    const auto pl = dn2::periods(ml, dn2::PeriodMethod::elliptic);
    constexpr double sqrt2 = std::numbers::sqrt2;
    return {
        make_report("kprime_kappa_vs_k_lambda", kappa, pk.Kprime, sqrt2 * pl.K, period_relation_tol),
        make_report("kprime_lambda_vs_k_kappa", kappa, pl.Kprime, sqrt2 * pk.K, period_relation_tol),
        make_report("equal_area", kappa, pk.K * pk.Kprime, pl.K * pl.Kprime, period_relation_tol),
        make_report("ratio_product", kappa, (pk.Kprime / pk.K) * (pl.Kprime / pl.K), 2, period_relation_tol),
    };
}

} // namespace sig4::identities
