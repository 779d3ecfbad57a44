#include "galmann/errors.hpp"
#include "galmann/frames.hpp"
#include "galmann/mannheim.hpp"
#include "galmann/synthesis.hpp"

#include "doctest.h"

#include <cmath>

using galmann::Curve;
using galmann::Expression;
using galmann::MannheimVerdict;
using galmann::Space;

namespace {

constexpr double kPi = 3.14159265358979323846;

Curve expr_curve(Space space, const char* y, const char* z, double s0, double s1) {
    return Curve::from_expressions(space, Expression::parse(y),
                                   z ? std::optional(Expression::parse(z)) : std::nullopt,
                                   std::nullopt, s0, s1);
}

Curve angle_curve(const char* y, const char* phi, double s0, double s1) {
    return Curve::from_expressions(Space::PG3_TypeII, Expression::parse(y), std::nullopt,
                                   std::optional(Expression::parse(phi)), s0, s1);
}

Curve circle() { return expr_curve(Space::G3, "cos(s)", "sin(s)", 0.0, 2 * kPi); }

// kappa = 1/s^2, tau = 1/s, so kappa/tau^2 == 1 on all of [1, 3].
Curve spiral_g3() {
    return expr_curve(Space::G3, "-(cos(log(s))+sin(log(s)))/2",
                      "(cos(log(s))-sin(log(s)))/2", 1.0, 3.0);
}

// kappa = 1/s^2, tau = 1/s with a spacelike acceleration: -kappa/tau^2 == -1.
Curve spiral_pg1() {
    return expr_curve(Space::PG3_TypeI, "(s*log(s)-s+1/(2*s))/2",
                      "(s*log(s)-s-1/(2*s))/2", 1.0, 3.0);
}

Curve hyperbolic_helix() {
    return expr_curve(Space::PG3_TypeI, "cosh(s)", "sinh(s)", 0.0, 2.0);
}

Curve cubic(Space space, double s0, double s1) {
    return expr_curve(space, "s^3/6", "s^2/2", s0, s1);
}

Curve synthesized(Space space, const char* kappa, const char* tau, double s0, double s1) {
    galmann::SynthesisSpec spec{space,
                                Expression::parse(kappa),
                                Expression::parse(tau),
                                0.0,
                                0.0,
                                0.0,
                                0.0,
                                0.0,
                                s0,
                                s1,
                                1e-3};
    return synthesize(spec);
}

} // namespace

TEST_CASE("constant-ratio detection in the galilean space") {
    galmann::MannheimReport circ = mannheim_constant(circle());
    CHECK(circ.verdict == MannheimVerdict::Mannheim);
    REQUIRE(circ.c_estimate.has_value());
    CHECK(*circ.c_estimate == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(circ.lambda.has_value());
    CHECK(*circ.lambda == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(circ.degenerate_points == 0);

    galmann::MannheimReport spiral = mannheim_constant(spiral_g3());
    CHECK(spiral.verdict == MannheimVerdict::Mannheim);
    CHECK(*spiral.c_estimate == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spiral.c_residual <= 1e-10);

    galmann::MannheimReport no = mannheim_constant(cubic(Space::G3, -1.0, 2.5));
    CHECK(no.verdict == MannheimVerdict::NotMannheim);
    CHECK_FALSE(no.lambda.has_value());
}

TEST_CASE("constant-ratio detection in the pseudo-galilean spaces") {
    galmann::MannheimReport helix = mannheim_constant(hyperbolic_helix());
    CHECK(helix.verdict == MannheimVerdict::Mannheim);
    CHECK(*helix.c_estimate == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(*helix.lambda == doctest::Approx(-1.0).epsilon(1e-12));

    galmann::MannheimReport spiral = mannheim_constant(spiral_pg1());
    CHECK(spiral.verdict == MannheimVerdict::Mannheim);
    CHECK(*spiral.c_estimate == doctest::Approx(-1.0).epsilon(1e-12));

    galmann::MannheimReport no = mannheim_constant(cubic(Space::PG3_TypeI, 1.5, 3.0));
    CHECK(no.verdict == MannheimVerdict::NotMannheim);

    Curve sqrt_curve = angle_curve("sqrt(1+s^2)", "log(s+sqrt(s^2+1))", 0.5, 2.0);
    galmann::MannheimReport type2 = mannheim_constant(sqrt_curve);
    CHECK(type2.verdict == MannheimVerdict::Mannheim);
    CHECK(*type2.c_estimate == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK_FALSE(type2.lambda.has_value());

    galmann::MannheimReport type2_no = mannheim_constant(angle_curve("s^2/2", "s", 0.5, 2.0));
    CHECK(type2_no.verdict == MannheimVerdict::NotMannheim);
    CHECK(*type2_no.c_estimate == doctest::Approx(-std::cosh(1.25)).epsilon(1e-10));

    galmann::MannheimReport torsionless = mannheim_constant(angle_curve("s^2/2", "1", 0.5, 2.0));
    CHECK(torsionless.verdict == MannheimVerdict::Degenerate);
    CHECK_FALSE(torsionless.c_estimate.has_value());
    CHECK(torsionless.degenerate_points == torsionless.grid_points);
}

TEST_CASE("tolerance override is honored") {
    galmann::MannheimReport forced = mannheim_constant(cubic(Space::G3, -1.0, 2.5), 1e9);
    CHECK(forced.verdict == MannheimVerdict::Mannheim);
    CHECK(forced.tolerance == 1e9);
}

TEST_CASE("partner construction on a curve with varying invariants") {
    galmann::PartnerResult r = construct_partner(spiral_g3(), 1.0);
    CHECK(r.report.accepted);
    CHECK_FALSE(r.report.degenerate);
    CHECK(r.report.coincidence_residual <= 1e-12);
    CHECK(r.report.skipped_points == 0);
    CHECK(r.partner.space() == Space::G3);

    galmann::SampleTable t = r.partner.table();
    for (std::size_t i = 0; i < t.rows(); ++i)
        CHECK(t.x[i] == t.s[i]);

    galmann::PartnerResult wrong = construct_partner(spiral_g3(), 0.5);
    CHECK_FALSE(wrong.report.accepted);
    CHECK(wrong.report.coincidence_residual >= 0.1);

    CHECK_THROWS_AS(construct_partner(spiral_g3(), 0.0), galmann::InputError);
}

TEST_CASE("partner of a constant-invariant helix degenerates to a line") {
    galmann::PartnerResult r = construct_partner(circle(), 1.0);
    CHECK(r.report.degenerate);
    CHECK(r.report.accepted);
    CHECK_FALSE(r.report.warnings.empty());

    galmann::PartnerResult h = construct_partner(hyperbolic_helix(), -1.0);
    CHECK(h.report.degenerate);
    CHECK(h.report.accepted);
    galmann::SampleTable line = h.partner.table();
    for (std::size_t i = 0; i < line.rows(); ++i) {
        CHECK(std::abs(line.y[i]) <= 1e-12);
        CHECK(std::abs(line.z[i]) <= 1e-12);
    }
}

TEST_CASE("offset recovery from a genuine pair") {
    galmann::PartnerResult r = construct_partner(spiral_g3(), 1.0);
    galmann::PairReport pair = verify_pair(spiral_g3(), r.partner);
    CHECK(pair.accepted);
    REQUIRE(pair.lambda.has_value());
    CHECK(*pair.lambda == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(pair.lambda_residual <= 1e-9);
    CHECK(pair.coincidence_residual <= 1e-9);

    galmann::PartnerResult p1 = construct_partner(spiral_pg1(), -1.0);
    galmann::PairReport pair1 = verify_pair(spiral_pg1(), p1.partner);
    CHECK(pair1.accepted);
    REQUIRE(pair1.lambda.has_value());
    CHECK(std::abs(*pair1.lambda) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(pair1.lambda_residual <= 1e-9);
}

TEST_CASE("a scaled copy is not a mannheim partner") {
    Curve alpha = circle();
    Curve scaled = expr_curve(Space::G3, "cos(s)/2", "sin(s)/2", 0.0, 2 * kPi);
    galmann::PairReport pair = verify_pair(alpha, scaled);
    CHECK_FALSE(pair.accepted);
    CHECK(pair.coincidence_residual == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("identical curves trigger the zero-offset warning") {
    galmann::PairReport pair = verify_pair(circle(), circle());
    REQUIRE(pair.lambda.has_value());
    CHECK(std::abs(*pair.lambda) <= 1e-9);
    CHECK_FALSE(pair.warnings.empty());
}

TEST_CASE("the linear torsion equation holds along constructed partners") {
    galmann::PartnerResult r = construct_partner(spiral_g3(), 1.0);
    galmann::PairReport pair = verify_pair(spiral_g3(), r.partner);
    REQUIRE(pair.lambda.has_value());
    galmann::OdeReport ode = verify_partner_ode(r.partner, *pair.lambda, Space::G3);
    CHECK(ode.linear_form_residual <= 1e-9);
    CHECK(ode.printed_form_residual >= 0.1);

    galmann::PartnerResult r1 = construct_partner(spiral_pg1(), -1.0);
    galmann::PairReport pair1 = verify_pair(spiral_pg1(), r1.partner);
    REQUIRE(pair1.lambda.has_value());
    galmann::OdeReport ode1 = verify_partner_ode(r1.partner, *pair1.lambda, Space::PG3_TypeI);
    CHECK(ode1.linear_form_residual <= 1e-9);
    CHECK(ode1.printed_form_residual >= 0.1);
}

TEST_CASE("the printed torsion equation holds when the invariants fit it exactly") {
    Curve tan_fixture = synthesized(Space::G3, "1", "tan(s)", 0.1, 1.2);
    galmann::OdeReport ode = verify_partner_ode(tan_fixture, 1.0, Space::G3);
    CHECK(ode.printed_form_residual <= 1e-9);

    Curve tanh_fixture = synthesized(Space::PG3_TypeI, "1", "-tanh(s)", 0.2, 2.0);
    galmann::OdeReport ode1 = verify_partner_ode(tanh_fixture, 1.0, Space::PG3_TypeI);
    CHECK(ode1.printed_form_residual <= 1e-9);

    Curve wrong = synthesized(Space::G3, "1", "s", 0.1, 1.2);
    galmann::OdeReport bad = verify_partner_ode(wrong, 1.0, Space::G3);
    CHECK(bad.printed_form_residual >= 0.5);
}

TEST_CASE("closed-form torsion models fit their own fixtures only") {
    Curve tan_fixture = synthesized(Space::G3, "1", "tan(s)", 0.1, 1.2);
    for (int eps : {1, -1}) {
        CAPTURE(eps);
        galmann::ClosedFormReport fit = closed_form_check(tan_fixture, 1.0, eps);
        REQUIRE(fit.tan_residual.has_value());
        CHECK(*fit.tan_residual <= 1e-9);
        CHECK(fit.tan_masked_points == 0);
        CHECK(fit.tanh_residual >= 0.1);
    }

    Curve tanh_fixture = synthesized(Space::PG3_TypeI, "1", "-tanh(s)", 0.2, 2.0);
    for (int eps : {1, -1}) {
        CAPTURE(eps);
        galmann::ClosedFormReport fit = closed_form_check(tanh_fixture, 1.0, eps);
        CHECK(fit.tanh_residual <= 1e-9);
        if (fit.tan_residual.has_value())
            CHECK(*fit.tan_residual >= 0.1);
    }
}

TEST_CASE("helix curves satisfy the planar-partner claim vacuously") {
    galmann::HelixReport circ = helix_planar_check(circle());
    CHECK(circ.is_helix);
    CHECK(circ.partner_degenerate);
    CHECK(circ.satisfied);
    CHECK_FALSE(circ.planarity_residual.has_value());

    galmann::HelixReport hyp = helix_planar_check(hyperbolic_helix());
    CHECK(hyp.is_helix);
    CHECK(hyp.satisfied);

    galmann::HelixReport spiral = helix_planar_check(spiral_g3());
    CHECK_FALSE(spiral.is_helix);
    CHECK(spiral.satisfied);

    CHECK_THROWS_AS(helix_planar_check(cubic(Space::G3, -1.0, 2.5)), galmann::InputError);
}

TEST_CASE("no offset type makes the cubic a mannheim partner source") {
    Curve c = cubic(Space::PG3_TypeI, 1.5, 3.0);
    for (double lambda : {-2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0, 2.0}) {
        CAPTURE(lambda);
        galmann::PartnerResult r = construct_partner(c, lambda);
        CHECK_FALSE(r.report.accepted);
        CHECK(r.report.coincidence_residual >= 0.1);
    }
}

TEST_CASE("sampled curves run the pipeline at the loose tolerance") {
    galmann::SampleTable t;
    int n = 1001;
    double h = kPi / (n - 1);
    for (int i = 0; i < n; ++i) {
        double s = i * h;
        t.s.push_back(s);
        t.x.push_back(s);
        t.y.push_back(std::cos(s));
        t.z.push_back(std::sin(s));
    }
    Curve c = Curve::from_samples(Space::G3, t);
    galmann::MannheimReport report = mannheim_constant(c);
    CHECK(report.verdict == MannheimVerdict::Mannheim);
    CHECK(*report.c_estimate == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(report.tolerance == galmann::Tolerances::sampled().invariant);
}
