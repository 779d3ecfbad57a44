#ifndef GALMANN_MANNHEIM_HPP
#define GALMANN_MANNHEIM_HPP

#include <optional>
#include <string>
#include <vector>

#include "galmann/curve.hpp"

namespace galmann {

enum class MannheimVerdict { Mannheim, NotMannheim, Degenerate };

std::string to_string(MannheimVerdict verdict);

/// Constancy test of the Mannheim ratio over the interior grid:
/// kappa/tau^2 in G3, -kappa/tau^2 in PG3-I, -kappa cosh(phi)/tau^2 in
/// PG3-II.  A curve admits a Mannheim partner exactly when the ratio is
/// one constant c; the partner offset lambda equals c in G3 and PG3-I.
struct MannheimReport {
    Space space;
    MannheimVerdict verdict;
    std::optional<double> c_estimate; // grid median; absent when degenerate
    double c_residual;                // max |c(s) - est| / max(1, |est|)
    std::optional<double> lambda;     // partner offset (Mannheim, G3 / PG3-I)
    std::size_t grid_points;
    std::size_t degenerate_points;    // samples with |tau| below tolerance
    double tolerance;
};

MannheimReport mannheim_constant(const Curve& curve,
                                 std::optional<double> tolerance = {});

/// Result of checking a curve pair for the Mannheim relation: the first
/// curve's principal normal must be parallel to the second's binormal
/// along the shared grid.  Samples where either frame fails are skipped
/// and counted; a pair whose second curve has no frame anywhere is
/// degenerate and passes vacuously.
struct PairReport {
    double coincidence_residual;  // grid max of the parallelism defect
    std::optional<double> lambda; // offset between the curves (sign follows
                                  // the partner's binormal orientation)
    double lambda_residual;       // constancy defect of the recovered offset
    bool degenerate;
    bool accepted;
    std::size_t grid_points;
    std::size_t skipped_points;
    double tolerance;
    std::vector<std::string> warnings;
};

struct PartnerResult {
    Curve partner;
    PairReport report;
};

/// Builds alpha + lambda N and checks the pair.
PartnerResult construct_partner(const Curve& alpha, double lambda);

/// Checks a given pair and recovers the offset lambda(s) from the gap
/// vector projected on the second curve's binormal.
PairReport verify_pair(const Curve& alpha, const Curve& alpha1);

/// Residuals of two torsion equations along a curve taken as the second
/// member of a Mannheim pair with offset lambda.  printed_form is
/// tau' = (kappa/lambda)(lambda^2 tau^2 + 1) in G3 and
/// tau' = (kappa/lambda)(lambda^2 tau^2 - 1) in PG3-I; linear_form is
/// tau' = kappa/lambda, which the Galilean angle functions give for
/// partners constructed by a normal offset.
struct OdeReport {
    Space space;
    double lambda;
    double printed_form_residual;
    double linear_form_residual;
    std::size_t grid_points;
};

OdeReport verify_partner_ode(const Curve& alpha1, double lambda, Space space);

/// Fit of closed-form torsion models against the curve's torsion, with
/// I(s) the running integral of kappa:
///   circular:   tau = -(epsilon/lambda) tan(arg),  arg = c0 - epsilon I
///               in G3 and arg = epsilon I + c0 in PG3-I,
///   hyperbolic: tau = -(epsilon/lambda) tanh(epsilon I + c0).
/// c0 is fitted at the first grid point.  Samples within 1e-3 of a
/// tangent pole (by |cos arg|) are masked and counted; when every sample
/// is masked the tangent residual is absent.
struct ClosedFormReport {
    Space space;
    double lambda;
    int epsilon;
    std::optional<double> tan_residual;
    double tanh_residual;
    double tan_c0;
    double tanh_c0;
    std::size_t tan_masked_points;
    std::size_t grid_points;
};

ClosedFormReport closed_form_check(const Curve& alpha1, double lambda,
                                   int epsilon);

/// Checks whether the curve is a generalized helix (tau/kappa constant)
/// and, if so, whether its Mannheim partner is planar.  A helix that is
/// also Mannheim has constant invariants, so the partner degenerates to a
/// straight line and the claim holds vacuously.
struct HelixReport {
    bool is_helix;
    double ratio_residual;
    std::optional<double> ratio;
    bool partner_degenerate;
    std::optional<double> planarity_residual; // max |tau_1| when frames exist
    bool satisfied;
    double tolerance;
};

HelixReport helix_planar_check(const Curve& alpha);

} // namespace galmann

#endif
