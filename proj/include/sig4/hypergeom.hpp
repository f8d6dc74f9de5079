#ifndef SIG4_HYPERGEOM_HPP
#define SIG4_HYPERGEOM_HPP

namespace sig4::hypergeom
{

// Parameters (a, b; c) of the Gauss function 2F1.
class HyperParams
{
public:
    // Throws DomainError when c is zero or a negative integer.
    HyperParams(double a, double b, double c);

    double a() const noexcept
    {
        return a_;
    }
    double b() const noexcept
    {
        return b_;
    }
    double c() const noexcept
    {
        return c_;
    }

private:
    double a_, b_, c_;
};

// Series cutover: above this argument the zero-balanced case switches to
// the logarithmic connection formula at 1 - x.
inline constexpr double connection_cutover = 0.75;

// 2F1(a, b; c; x) for 0 <= x < 1.
//
// x <= 0.75: direct Gauss series. x > 0.75 with c = a + b: logarithmic
// connection formula in powers of 1 - x. Other families above the cutover
// are only accepted while the series has positive terms and x <= 0.95;
// everything else throws DomainError rather than lose accuracy.
double gauss_2f1(const HyperParams &p, double x);

// The Gauss series summed term by term with no connection formula. Useful as
// an independent path for overlap checks.
double gauss_2f1_series(const HyperParams &p, double x);

// Closed form of F(1/4, 3/4; 1/2; u) = cos(psi/2) / cos(psi), sin^2 psi = u.
double f14_34_12_closed(double u);

// Arithmetic-geometric mean of two positive numbers.
double agm(double a, double b);

// Complete elliptic integral of the first kind in the parameter convention
// K(m), m = k^2: pi / (2 agm(1, sqrt(1 - m))). Requires 0 <= m < 1.
double complete_K(double m);

} // namespace sig4::hypergeom

#endif
