#include "galmann/mannheim.hpp"

#include <algorithm>
#include <cmath>

#include "galmann/errors.hpp"
#include "galmann/frames.hpp"
#include "galmann/spaces.hpp"

namespace galmann {

namespace {

constexpr double kZeroOffsetTol = 1e-9;
constexpr double kTanPoleTol = 1e-3;

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double constancy_residual(const std::vector<double>& values, double estimate) {
    double worst = 0.0;
    for (double x : values)
        worst = std::max(worst,
                         std::abs(x - estimate) /
                             std::max(1.0, std::abs(estimate)));
    return worst;
}

double mannheim_ratio(Space space, const InvariantSample& inv) {
    double t2 = inv.tau * inv.tau;
    switch (space) {
    case Space::G3:
        return inv.kappa / t2;
    case Space::PG3_TypeI:
        return -inv.kappa / t2;
    case Space::PG3_TypeII:
        return -inv.kappa * std::cosh(*inv.phi) / t2;
    }
    throw InputError("unknown space");
}

struct FrameVectors {
    Vec3 N, B;
};

FrameVectors frame_vectors(const Curve& curve, double s) {
    CoordJets jets = curve.jets_at(s, 2);
    FrameJets f = make_frame_jets(curve.space(), jets, s,
                                  curve.tolerances().curvature);
    return FrameVectors{Vec3{0.0, f.Ny.value(), f.Nz.value()},
                        Vec3{0.0, f.By.value(), f.Bz.value()}};
}

double pair_inner(Space space, Vec3 a, Vec3 b) {
    return space == Space::G3 ? iso_inner_g3(a, b) : pg_scalar_product(a, b);
}

void require_nonzero_offset(double lambda) {
    if (lambda == 0.0 || !std::isfinite(lambda))
        throw InputError("the partner offset must be finite and nonzero");
}

} // namespace

std::string to_string(MannheimVerdict verdict) {
    switch (verdict) {
    case MannheimVerdict::Mannheim:
        return "Mannheim";
    case MannheimVerdict::NotMannheim:
        return "NotMannheim";
    case MannheimVerdict::Degenerate:
        return "Degenerate";
    }
    return "?";
}

MannheimReport mannheim_constant(const Curve& curve,
                                 std::optional<double> tolerance) {
    MannheimReport rep{};
    rep.space = curve.space();
    rep.tolerance = tolerance.value_or(curve.tolerances().invariant);
    double tau_tol = curve.tolerances().curvature;

    std::vector<double> ratios;
    for (double s : curve.interior_grid()) {
        ++rep.grid_points;
        try {
            InvariantSample inv = invariants_at(curve, s);
            if (std::abs(inv.tau) <= tau_tol) {
                ++rep.degenerate_points;
                continue;
            }
            ratios.push_back(mannheim_ratio(rep.space, inv));
        } catch (const DegenerateError&) {
            ++rep.degenerate_points;
        }
    }

    if (rep.degenerate_points > 0 || ratios.empty()) {
        rep.verdict = MannheimVerdict::Degenerate;
        rep.c_residual = 0.0;
        return rep;
    }
    double estimate = median(ratios);
    rep.c_estimate = estimate;
    rep.c_residual = constancy_residual(ratios, estimate);
    rep.verdict = rep.c_residual <= rep.tolerance ? MannheimVerdict::Mannheim
                                                  : MannheimVerdict::NotMannheim;
    if (rep.verdict == MannheimVerdict::Mannheim &&
        rep.space != Space::PG3_TypeII)
        rep.lambda = estimate;
    return rep;
}

PartnerResult construct_partner(const Curve& alpha, double lambda) {
    if (alpha.space() == Space::PG3_TypeII)
        throw InputError("partner construction covers G3 and PG3-I curves");
    require_nonzero_offset(lambda);

    Curve partner = alpha.offset_by_normal(lambda);
    PairReport rep{};
    rep.lambda = lambda;
    rep.lambda_residual = 0.0;
    rep.tolerance = partner.tolerances().invariant;

    double worst = 0.0;
    std::size_t used = 0;
    for (double s : partner.interior_grid()) {
        ++rep.grid_points;
        try {
            FrameVectors fa = frame_vectors(alpha, s);
            FrameVectors f1 = frame_vectors(partner, s);
            worst = std::max(worst, parallel_residual(fa.N, f1.B));
            ++used;
        } catch (const DegenerateError&) {
            ++rep.skipped_points;
        }
    }
    rep.degenerate = used == 0;
    rep.coincidence_residual = rep.degenerate ? 0.0 : worst;
    rep.accepted = rep.degenerate || rep.coincidence_residual <= rep.tolerance;
    if (rep.degenerate)
        rep.warnings.push_back(
            "the offset curve is a straight line (no frame anywhere); "
            "the normal-binormal relation holds vacuously");
    else if (rep.skipped_points > 0)
        rep.warnings.push_back(std::to_string(rep.skipped_points) +
                               " samples skipped: no usable frame");
    return PartnerResult{std::move(partner), std::move(rep)};
}

PairReport verify_pair(const Curve& alpha, const Curve& alpha1) {
    if (alpha.space() != alpha1.space())
        throw InputError("pair curves must live in the same space");
    if (alpha.space() == Space::PG3_TypeII)
        throw InputError("pair checks cover G3 and PG3-I curves");

    std::vector<double> grid;
    for (double s : alpha1.interior_grid())
        if (alpha.queryable_at(s))
            grid.push_back(s);
    if (grid.size() < 9)
        throw InputError("the curves share fewer than 9 usable grid points");

    PairReport rep{};
    bool loose = alpha.sampled_data() || alpha1.sampled_data();
    rep.tolerance = (loose ? Tolerances::sampled() : Tolerances::jet_backed())
                        .invariant;
    rep.grid_points = grid.size();

    double worst = 0.0;
    std::vector<double> offsets;
    for (double s : grid) {
        try {
            FrameVectors fa = frame_vectors(alpha, s);
            FrameVectors f1 = frame_vectors(alpha1, s);
            worst = std::max(worst, parallel_residual(fa.N, f1.B));
            Vec3 gap = alpha.point_at(s) - alpha1.point_at(s);
            offsets.push_back(pair_inner(alpha.space(), gap, f1.B) /
                              pair_inner(alpha.space(), f1.B, f1.B));
        } catch (const DegenerateError&) {
            ++rep.skipped_points;
        }
    }
    rep.degenerate = offsets.empty();
    if (rep.degenerate) {
        rep.warnings.push_back("the second curve has no usable frame at any "
                               "shared grid point");
    } else {
        rep.coincidence_residual = worst;
        double estimate = median(offsets);
        rep.lambda = estimate;
        rep.lambda_residual = constancy_residual(offsets, estimate);
        if (std::abs(estimate) <= kZeroOffsetTol)
            rep.warnings.push_back("the recovered offset is zero: the curves "
                                   "coincide and the relation is trivial");
        if (rep.skipped_points > 0)
            rep.warnings.push_back(std::to_string(rep.skipped_points) +
                                   " samples skipped: no usable frame");
    }
    rep.accepted = rep.degenerate || rep.coincidence_residual <= rep.tolerance;
    return rep;
}

OdeReport verify_partner_ode(const Curve& alpha1, double lambda, Space space) {
    if (space == Space::PG3_TypeII)
        throw InputError("the torsion equations apply in G3 and PG3-I");
    if (alpha1.space() != space)
        throw InputError("the curve lives in " + to_string(alpha1.space()) +
                         " but the check was requested for " +
                         to_string(space));
    require_nonzero_offset(lambda);
    if (alpha1.max_jet_order() < 4)
        throw InputError("the torsion equations need derivative order 4, "
                         "but this curve provides only order " +
                         std::to_string(alpha1.max_jet_order()));

    double sign = space == Space::G3 ? 1.0 : -1.0;
    OdeReport rep{space, lambda, 0.0, 0.0, 0};
    for (double s : alpha1.interior_grid()) {
        ++rep.grid_points;
        CoordJets jets = alpha1.jets_at(s, 4);
        FrameJets f = make_frame_jets(space, jets, s,
                                      alpha1.tolerances().curvature);
        double k = f.kappa.value();
        double t = f.tau->value();
        double tp = f.tau->deriv(1);
        rep.printed_form_residual =
            std::max(rep.printed_form_residual,
                     std::abs(tp - (k / lambda) *
                                       (lambda * lambda * t * t + sign)));
        rep.linear_form_residual =
            std::max(rep.linear_form_residual, std::abs(tp - k / lambda));
    }
    return rep;
}

ClosedFormReport closed_form_check(const Curve& alpha1, double lambda,
                                   int epsilon) {
    Space space = alpha1.space();
    if (space == Space::PG3_TypeII)
        throw InputError("closed-form torsion models apply in G3 and PG3-I");
    if (epsilon != 1 && epsilon != -1)
        throw InputError("epsilon must be +1 or -1");
    require_nonzero_offset(lambda);

    std::vector<double> grid = alpha1.interior_grid();
    std::vector<double> kappa, tau;
    kappa.reserve(grid.size());
    tau.reserve(grid.size());
    for (double s : grid) {
        InvariantSample inv = invariants_at(alpha1, s);
        kappa.push_back(inv.kappa);
        tau.push_back(inv.tau);
    }

    std::size_t n = grid.size();
    double h = (grid.back() - grid.front()) / static_cast<double>(n - 1);
    std::vector<double> integral(n, 0.0);
    integral[1] = h * (5.0 * kappa[0] + 8.0 * kappa[1] - kappa[2]) / 12.0;
    for (std::size_t i = 1; i + 1 < n; ++i)
        integral[i + 1] =
            integral[i] +
            h * (-kappa[i - 1] + 8.0 * kappa[i] + 5.0 * kappa[i + 1]) / 12.0;

    double e = static_cast<double>(epsilon);
    ClosedFormReport rep{space, lambda, epsilon, std::nullopt, 0.0,
                         0.0,   0.0,    0,       n};
    rep.tan_c0 = std::atan(-e * lambda * tau[0]);
    rep.tanh_c0 = std::atanh(
        std::clamp(-e * lambda * tau[0], -(1.0 - 1e-12), 1.0 - 1e-12));

    double tan_worst = 0.0;
    bool tan_any = false;
    double tanh_worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double arg = space == Space::G3 ? rep.tan_c0 - e * integral[i]
                                        : e * integral[i] + rep.tan_c0;
        if (std::abs(std::cos(arg)) < kTanPoleTol) {
            ++rep.tan_masked_points;
        } else {
            tan_worst = std::max(
                tan_worst, std::abs(-(e / lambda) * std::tan(arg) - tau[i]));
            tan_any = true;
        }
        double model =
            -(e / lambda) * std::tanh(e * integral[i] + rep.tanh_c0);
        tanh_worst = std::max(tanh_worst, std::abs(model - tau[i]));
    }
    if (tan_any)
        rep.tan_residual = tan_worst;
    rep.tanh_residual = tanh_worst;
    return rep;
}

HelixReport helix_planar_check(const Curve& alpha) {
    if (alpha.space() == Space::PG3_TypeII)
        throw InputError("the helix check covers G3 and PG3-I curves");
    MannheimReport mrep = mannheim_constant(alpha);
    if (mrep.verdict != MannheimVerdict::Mannheim)
        throw InputError("the helix check needs a Mannheim curve "
                         "(this one is " +
                         to_string(mrep.verdict) + ")");

    HelixReport rep{};
    rep.tolerance = alpha.tolerances().invariant;
    std::vector<double> ratios;
    for (double s : alpha.interior_grid()) {
        InvariantSample inv = invariants_at(alpha, s);
        ratios.push_back(inv.tau / inv.kappa);
    }
    double estimate = median(ratios);
    rep.ratio_residual = constancy_residual(ratios, estimate);
    rep.is_helix = rep.ratio_residual <= rep.tolerance;
    if (!rep.is_helix) {
        rep.satisfied = true;
        return rep;
    }
    rep.ratio = estimate;

    PartnerResult partner = construct_partner(alpha, *mrep.lambda);
    rep.partner_degenerate = partner.report.degenerate;
    if (rep.partner_degenerate) {
        rep.satisfied = true;
        return rep;
    }
    double worst = 0.0;
    std::size_t used = 0;
    for (double s : partner.partner.interior_grid()) {
        try {
            worst = std::max(worst,
                             std::abs(invariants_at(partner.partner, s).tau));
            ++used;
        } catch (const DegenerateError&) {
        }
    }
    if (used == 0) {
        rep.partner_degenerate = true;
        rep.satisfied = true;
        return rep;
    }
    rep.planarity_residual = worst;
    rep.satisfied = worst <= rep.tolerance;
    return rep;
}

} // namespace galmann
