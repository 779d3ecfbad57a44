#ifndef GALMANN_FRAMES_HPP
#define GALMANN_FRAMES_HPP

#include <optional>
#include <vector>

#include "galmann/curve.hpp"
#include "galmann/jet.hpp"
#include "galmann/spaces.hpp"

namespace galmann {

/// Derivative towers of the moving frame at one parameter value.  The x
/// components are constant (T_x == 1, N_x == B_x == 0) and therefore
/// implicit.  With input coordinate jets of order K: T components have
/// order K-1, N/B components and kappa have order K-2, and tau has order
/// K-3 (absent when K < 3).  For PG3_TypeII, `phi` carries the hyperbolic
/// angle jet and kappa is the signed second derivative of y.
struct FrameJets {
    Jet Ty, Tz;
    Jet Ny, Nz;
    Jet By, Bz;
    Jet kappa;
    std::optional<Jet> tau;
    std::optional<Jet> phi;
};

/// Builds the frame towers from coordinate jets of order >= 2.  Throws
/// DegenerateError when the frame does not exist at s: vanishing
/// curvature or a lightlike acceleration (G3 / PG3_TypeI).  The
/// PG3_TypeII frame exists for any kappa; its torsion divides by
/// sinh(phi), so when that is below tolerance tau is left absent and
/// invariant queries fail instead.
FrameJets make_frame_jets(Space space, const CoordJets& jets, double s,
                          double curvature_tol);

/// Curvature and torsion at one parameter value.
struct InvariantSample {
    double s;
    double kappa;
    double tau;
    std::optional<double> phi;
};

/// The moving frame at one parameter value.
struct FrenetSample {
    double s;
    Vec3 T, N, B;
    double kappa;
    double tau;
    std::optional<double> phi;
};

/// Defect of the frame derivative equations at one parameter value:
/// rT = |T' - (dT/ds per the space's frame equations)| and likewise for
/// N and B, measured in the Euclidean norm of the (y, z) components.
struct FrenetResidualRow {
    double s;
    double rT, rN, rB;
};

InvariantSample invariants_at(const Curve& curve, double s);
FrenetSample frame_at(const Curve& curve, double s);
FrenetResidualRow frenet_residuals_at(const Curve& curve, double s);

std::vector<InvariantSample> invariants_grid(const Curve& curve);
std::vector<FrenetResidualRow> frenet_residuals_grid(const Curve& curve);

} // namespace galmann

#endif
