#ifndef SIG4_NUMERIC_HPP
#define SIG4_NUMERIC_HPP

// Numeric kernel: tanh-sinh quadrature, safeguarded Newton inversion and
// series summation shared by every other part of the library.

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace sig4
{

using CPoint = std::complex<double>;

// An empty optional marks a pole of the evaluated function.
template <typename T>
using PoleOr = std::optional<T>;

// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// An iterative method failed (no convergence, non-finite intermediate). The
// best value reached so far travels with the exception.
class NumericFailure : public std::runtime_error
{
public:
    NumericFailure(const std::string &what, double best_estimate)
        : std::runtime_error(what), best_(best_estimate)
    {}
    double best_estimate() const noexcept
    {
        return best_;
    }

private:
    double best_;
};

struct QuadResult {
    double value = 0;
    double err_estimate = 0;
    std::size_t evaluations = 0;
};

// Quadrature node handed to integrands that need to resolve an endpoint
// singularity. to_left = x - a and to_right = b - x are computed from the
// transformation itself, so they keep full relative precision even where x
// rounds to an endpoint.
struct Abscissa {
    double x;
    double to_left;
    double to_right;
};

using PlainIntegrand = std::function<double(double)>;
using NodeIntegrand = std::function<double(const Abscissa &)>;

inline constexpr double default_quad_tol = 1e-13;

// Double-exponential (tanh-sinh) quadrature over [a, b]. A flagged endpoint
// may carry an integrable singularity; the rule then samples down to
// subnormal-free distances from it. Unflagged endpoints are trimmed where
// the nodes become indistinguishable from the endpoint.
//
// Refinement halves the step until successive estimates differ by at most
// max(tol, round-off floor); err_estimate is that last difference.
// Throws NumericFailure when the level cap is hit or the integrand returns a
// non-finite value, DomainError when !(a < b).
QuadResult integrate(const NodeIntegrand &f, double a, double b, bool singular_left,
                     bool singular_right, double tol = default_quad_tol);
QuadResult integrate(const PlainIntegrand &f, double a, double b, bool singular_left,
                     bool singular_right, double tol = default_quad_tol);

struct Bracket {
    double lo;
    double hi;
};

// Solve f(x) = target for increasing f. Newton steps that leave the current
// bracket are replaced by bisection. Without an explicit bracket one is
// searched for outward from x0.
double newton_invert(const std::function<double(double)> &f,
                     const std::function<double(double)> &fprime, double target, double x0,
                     double tol, std::optional<Bracket> bracket = std::nullopt, int max_iter = 200);

// Sum term(0) + term(1) + ... The callback is invoked with consecutive
// indices starting at 0, so stateful term generators may update
// incrementally. Stops once the geometric tail bound |t_n| r / (1 - r),
// r = |t_n / t_{n-1}|, drops to tol.
double sum_series(const std::function<double(std::size_t)> &term, double tol,
                  std::size_t max_terms);

} // namespace sig4

#endif
