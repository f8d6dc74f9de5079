#ifndef SIG4_JACOBI_HPP
#define SIG4_JACOBI_HPP

#include <sig4/numeric.hpp>

namespace sig4::jacobi
{

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

struct ComplexJacobiTriple {
    CPoint sn;
    CPoint cn;
    CPoint dn;
};

// Common denominator below which the complex triple is reported as a pole.
inline constexpr double pole_threshold = 1e-13;

// sn, cn, dn at real x and parameter m = k^2 in [0, 1). The argument is
// reduced modulo 4K(m) and evaluated by descending Landen (AGM) recursion.
JacobiTriple jacobi_real(double x, double m);

// Complex argument through the addition theorem with the imaginary
// transformation, using two real evaluations at parameters m and 1 - m.
// Empty result at poles (z congruent to iK'(m) modulo 2K, 2iK').
PoleOr<ComplexJacobiTriple> jacobi_complex(CPoint z, double m);

} // namespace sig4::jacobi

#endif
