#ifndef SIG4_WEIERSTRASS_HPP
#define SIG4_WEIERSTRASS_HPP

#include <sig4/numeric.hpp>

namespace sig4
{

// Real half-periods (K, K') of a rectangular lattice; the periods are 2K
// and 2iK'.
struct PeriodPair {
    double K;
    double Kprime;
};

namespace weierstrass
{

// Invariants and derived data of a rectangular lattice (positive
// discriminant). e1 > e2 > e3 are the roots of 4w^3 - g2 w - g3, m is the
// associated Jacobian parameter (e2 - e3) / (e1 - e3), scale = sqrt(e1 - e3).
struct LatticeData {
    double g2;
    double g3;
    double delta;
    double e1;
    double e2;
    double e3;
    double m;
    double scale;
};

// Threshold on |sn^2| below which wp reports the lattice-point pole.
inline constexpr double pole_threshold = 1e-13;

// Throws DomainError unless g2^3 - 27 g3^2 > 0.
LatticeData lattice_from_invariants(double g2, double g3);

// Same data from known roots e1 > e2 > e3 summing to zero. Exact roots avoid
// the ill-conditioning of the cubic solve when two roots nearly coincide.
LatticeData lattice_from_roots(double e1, double e2, double e3);

// wp(z) = e3 + (e1 - e3) / sn^2(z sqrt(e1 - e3), m). Empty at lattice points.
PoleOr<CPoint> wp(CPoint z, const LatticeData &lat);

// wp(z) - c with e3 - c formed first, so wp close to c keeps its relative
// accuracy instead of cancelling against c afterwards.
PoleOr<CPoint> wp_minus(CPoint z, const LatticeData &lat, double c);

// (omega, omega'/i) = (K(m), K(1 - m)) / sqrt(e1 - e3).
PeriodPair wp_halfperiods(const LatticeData &lat);

} // namespace weierstrass

} // namespace sig4

#endif
