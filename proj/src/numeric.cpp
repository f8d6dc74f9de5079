#include <sig4/numeric.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace sig4
{

namespace
{

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int min_level = 3;
constexpr int max_level = 12;

// Nodes closer to a singular endpoint than exp(-2u) = this contribute
// nothing representable once multiplied by their weight.
constexpr double singular_cutoff = 1e-290;

struct Node {
    double dist;   // distance to the nearer endpoint
    double weight; // including the half-width Jacobian
};

// Node at parameter t >= 0 of the tanh-sinh map onto an interval of
// half-width `half`.
Node tanh_sinh_node(double t, double half)
{
    const double u = std::numbers::pi / 2 * std::sinh(t);
    const double q = std::exp(-2 * u);
    const double onep = 1 + q;
    return {half * 2 * q / onep, half * std::numbers::pi / 2 * std::cosh(t) * 4 * q / (onep * onep)};
}

bool keep_node(double t, bool singular)
{
    const double u = std::numbers::pi / 2 * std::sinh(t);
    const double q = std::exp(-2 * u);
    return singular ? q > singular_cutoff : q > eps;
}

} // namespace

QuadResult integrate(const NodeIntegrand &f, double a, double b, bool singular_left,
                     bool singular_right, double tol)
{
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("integrate: require finite a < b");
    }
    const double width = b - a;
    const double half = width / 2;
    const double mid = a + half;

    QuadResult res;
    double sum = 0, l1 = 0;

    auto eval = [&](const Abscissa &node, double w) {
        const double fx = f(node);
        ++res.evaluations;
        if (!std::isfinite(fx)) {
            throw NumericFailure("integrate: non-finite integrand value at x = " + std::to_string(node.x),
                                 res.value);
        }
        sum += w * fx;
        l1 += std::abs(w * fx);
    };

    // Visit the pair of nodes at +t and -t.
    auto visit = [&](double t) {
        const Node n = tanh_sinh_node(t, half);
        if (n.weight == 0) {
            return;
        }
        if (keep_node(t, singular_right)) {
            eval({b - n.dist, width - n.dist, n.dist}, n.weight);
        }
        if (keep_node(t, singular_left)) {
            eval({a + n.dist, n.dist, width - n.dist}, n.weight);
        }
    };
    auto in_range = [&](double t) { return keep_node(t, singular_left) || keep_node(t, singular_right); };

    eval({mid, half, half}, half * std::numbers::pi / 2);
    for (int k = 1; in_range(k); ++k) {
        visit(k);
    }
    double h = 1;
    double prev = sum * h;
    res.value = prev;

    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        for (int j = 0;; ++j) {
            const double t = (2 * j + 1) * h;
            if (!in_range(t)) {
                break;
            }
            visit(t);
        }
        const double est = sum * h;
        res.value = est;
        res.err_estimate = std::abs(est - prev);
        prev = est;
        const double floor = 16 * eps * l1 * h;
        if (level >= min_level && res.err_estimate <= std::max(tol, floor)) {
            return res;
        }
    }
    throw NumericFailure("integrate: no convergence after " + std::to_string(max_level)
                             + " refinement levels (last delta " + std::to_string(res.err_estimate) + ")",
                         res.value);
}

QuadResult integrate(const PlainIntegrand &f, double a, double b, bool singular_left,
                     bool singular_right, double tol)
{
    return integrate(NodeIntegrand([&f](const Abscissa &n) { return f(n.x); }), a, b, singular_left,
                     singular_right, tol);
}

double newton_invert(const std::function<double(double)> &f,
                     const std::function<double(double)> &fprime, double target, double x0,
                     double tol, std::optional<Bracket> bracket, int max_iter)
{
    auto g = [&](double x) {
        const double v = f(x) - target;
        if (!std::isfinite(v)) {
            throw NumericFailure("newton_invert: non-finite function value", x);
        }
        return v;
    };

    double lo, hi;
    if (bracket) {
        lo = bracket->lo;
        hi = bracket->hi;
        if (!(lo < hi)) {
            throw DomainError("newton_invert: empty bracket");
        }
        x0 = std::clamp(x0, lo, hi);
    } else {
        const double g0 = g(x0);
        if (std::abs(g0) <= tol) {
            return x0;
        }
        // f increases: the root lies left of x0 when g0 > 0.
        double step = 0.5 * std::max(1.0, std::abs(x0));
        bool found = false;
        for (int i = 0; i < 64 && !found; ++i, step *= 2) {
            const double probe = g0 > 0 ? x0 - step : x0 + step;
            const double gp = g(probe);
            if ((gp <= 0) == (g0 > 0)) {
                lo = g0 > 0 ? probe : x0;
                hi = g0 > 0 ? x0 : probe;
                found = true;
            }
        }
        if (!found) {
            throw NumericFailure("newton_invert: no bracket found", x0);
        }
    }

    double x = x0;
    for (int it = 0; it < max_iter; ++it) {
        const double gx = g(x);
        if (std::abs(gx) <= tol) {
            return x;
        }
        if (gx < 0) {
            lo = x;
        } else {
            hi = x;
        }
        if (hi - lo <= 4 * eps * std::max(1.0, std::abs(x))) {
            // Bracket collapsed to a few ulps; no representable improvement.
            return x;
        }
        const double d = fprime(x);
        double next = x - gx / d;
        if (!(d > 0) || !std::isfinite(next) || next <= lo || next >= hi) {
            next = lo + (hi - lo) / 2;
        }
        x = next;
    }
    throw NumericFailure("newton_invert: iteration cap exceeded", x);
}

double sum_series(const std::function<double(std::size_t)> &term, double tol, std::size_t max_terms)
{
    double sum = 0;
    double prev = 0;
    for (std::size_t n = 0; n < max_terms; ++n) {
        const double t = term(n);
        if (!std::isfinite(t)) {
            throw NumericFailure("sum_series: non-finite term at n = " + std::to_string(n), sum);
        }
        sum += t;
        if (n > 0) {
            if (t == 0) {
                return sum;
            }
            if (prev != 0) {
                const double r = std::abs(t / prev);
                if (r < 1 && std::abs(t) * r / (1 - r) <= tol) {
                    return sum;
                }
            }
        }
        prev = t;
    }
    throw NumericFailure("sum_series: tail bound not met within " + std::to_string(max_terms) + " terms",
                         sum);
}

} // namespace sig4
