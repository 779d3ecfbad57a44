#include "galmann/synthesis.hpp"

#include <cmath>

#include "galmann/errors.hpp"
#include "galmann/numformat.hpp"

namespace galmann {

namespace {

struct State {
    double y, yp, z, zp, theta;
};

State operator+(const State& a, const State& b) {
    return {a.y + b.y, a.yp + b.yp, a.z + b.z, a.zp + b.zp, a.theta + b.theta};
}

State operator*(double c, const State& a) {
    return {c * a.y, c * a.yp, c * a.z, c * a.zp, c * a.theta};
}

} // namespace

Curve synthesize(const SynthesisSpec& spec) {
    if (spec.space == Space::PG3_TypeII)
        throw InputError("curve synthesis covers G3 and PG3-I only");
    if (!(spec.s_min < spec.s_max))
        throw InputError("synthesis domain needs s_min < s_max");
    if (!(spec.step > 0.0))
        throw InputError("synthesis step must be positive");

    double span = spec.s_max - spec.s_min;
    auto steps = static_cast<std::size_t>(std::ceil(span / spec.step - 1e-9));
    if (steps < 8)
        throw InputError("synthesis step too coarse: the grid needs at "
                         "least 9 rows");
    double h = span / static_cast<double>(steps);

    bool circular = spec.space == Space::G3;
    auto deriv = [&](double s, const State& u) {
        double k = spec.kappa.eval(s);
        double t = spec.tau.eval(s);
        double c = circular ? std::cos(u.theta) : std::cosh(u.theta);
        double sn = circular ? std::sin(u.theta) : std::sinh(u.theta);
        return State{u.yp, k * c, u.zp, k * sn, t};
    };
    auto check_kappa = [&](double s) {
        double k = spec.kappa.eval(s);
        if (!(k > 0.0))
            throw DomainError("curvature must stay positive: kappa(" +
                              format_double(s) + ") = " + format_double(k));
    };

    std::vector<OdeStateRow> rows;
    rows.reserve(steps + 1);
    State u{spec.y0, spec.y1, spec.z0, spec.z1, spec.theta0};
    for (std::size_t i = 0; i <= steps; ++i) {
        double s = spec.s_min + static_cast<double>(i) * h;
        if (i == steps)
            s = spec.s_max;
        check_kappa(s);
        if (!std::isfinite(u.y) || !std::isfinite(u.yp) ||
            !std::isfinite(u.z) || !std::isfinite(u.zp) ||
            !std::isfinite(u.theta))
            throw DomainError("synthesis state became non-finite at s = " +
                              format_double(s));
        rows.push_back(OdeStateRow{s, u.y, u.yp, u.z, u.zp, u.theta});
        if (i == steps)
            break;
        State k1 = deriv(s, u);
        State k2 = deriv(s + 0.5 * h, u + (0.5 * h) * k1);
        State k3 = deriv(s + 0.5 * h, u + (0.5 * h) * k2);
        State k4 = deriv(s + h, u + h * k3);
        u = u + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return Curve::from_ode_solution(spec.space, spec.kappa, spec.tau,
                                    std::move(rows));
}

} // namespace galmann
