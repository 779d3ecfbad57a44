#ifndef GALMANN_SYNTHESIS_HPP
#define GALMANN_SYNTHESIS_HPP

#include "galmann/curve.hpp"
#include "galmann/expression.hpp"

namespace galmann {

/// Data for building a curve from prescribed curvature and torsion.  The
/// acceleration direction is tracked as an angle theta with theta' = tau:
/// circular for G3 (y'' = kappa cos theta, z'' = kappa sin theta) and
/// hyperbolic for PG3_TypeI (cosh / sinh).  theta0 and the initial
/// coordinate data fix the rigid-motion freedom.
struct SynthesisSpec {
    Space space;
    Expression kappa;
    Expression tau;
    double theta0;
    double y0, y1; // y(s_min), y'(s_min)
    double z0, z1; // z(s_min), z'(s_min)
    double s_min, s_max;
    double step;
};

/// Integrates the frame ODE with classical fourth-order Runge-Kutta on a
/// uniform grid of spacing at most `step` and returns the resulting curve.
/// kappa must be positive over the whole interval.
Curve synthesize(const SynthesisSpec& spec);

} // namespace galmann

#endif
