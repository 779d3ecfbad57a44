
#include "galmann/frames.hpp"

#include <cmath>

#include "galmann/errors.hpp"

namespace galmann {

namespace {

FrameJets frame_jets_g3(const CoordJets& jets, double s, double tol) {
    Jet y1 = jets.y.derivative();
    Jet z1 = jets.z.derivative();
    Jet y2 = y1.derivative();
    Jet z2 = z1.derivative();
    if (std::hypot(y2.value(), z2.value()) <= tol)
        throw DegenerateError("vanishing curvature", s);

    Jet kappa = sqrt(y2 * y2 + z2 * z2);
    FrameJets f{y1,           z1,
                y2 / kappa,   z2 / kappa,
                -(z2 / kappa), y2 / kappa,
                kappa,        std::nullopt,
                std::nullopt};
    if (kappa.order() >= 1) {
        Jet y3 = y2.derivative();
        Jet z3 = z2.derivative();
        f.tau = (y2 * z3 - z2 * y3) / (kappa * kappa);
    }
    return f;
}

FrameJets frame_jets_pg1(const CoordJets& jets, double s, double tol) {
    Jet y1 = jets.y.derivative();
    Jet z1 = jets.z.derivative();
    Jet y2 = y1.derivative();
    Jet z2 = z1.derivative();
    double a = y2.value();
    double b = z2.value();
    double q = a * a - b * b;
    if (std::abs(q) <= tol * (a * a + b * b) || std::abs(q) < 1e-12) {
        if (a * a + b * b <= tol * tol)
            throw DegenerateError("vanishing curvature", s);
        throw DegenerateError("lightlike acceleration", s);
    }

    Jet kappa = sqrt(abs(y2 * y2 - z2 * z2));
    if (kappa.value() <= tol)
        throw DegenerateError("vanishing curvature", s);
    FrameJets f{y1,         z1,
                y2 / kappa, z2 / kappa,
                z2 / kappa, y2 / kappa,
                kappa,      std::nullopt,
                std::nullopt};
    if (kappa.order() >= 1) {
        Jet y3 = y2.derivative();
        Jet z3 = z2.derivative();
        f.tau = (y2 * z3 - z2 * y3) / (kappa * kappa);
    }
    return f;
}

FrameJets frame_jets_pg2(const CoordJets& jets, double tol) {
    const Jet& phi = *jets.phi;
    Jet y1 = jets.y.derivative();
    Jet y2 = y1.derivative();
    Jet a2 = cosh(phi);
    Jet a3 = sinh(phi);
    int k = jets.y.order() - 2;
    FrameJets f{y1,
                Jet(jets.y.order() - 1),
                a2.truncated(k),
                a3.truncated(k),
                a3.truncated(k),
                a2.truncated(k),
                y2,
                std::nullopt,
                phi};
    if (k >= 1 && std::abs(a3.value()) > tol)
        f.tau = a2.derivative() / a3.truncated(k - 1);
    return f;
}

void require_order(const Curve& curve, int order, const char* op) {
    if (curve.max_jet_order() < order)
        throw InputError(std::string(op) +
                         " needs derivative order " + std::to_string(order) +
                         ", but this curve provides only order " +
                         std::to_string(curve.max_jet_order()));
}

double norm2(double y, double z) { return std::hypot(y, z); }

} // namespace

FrameJets make_frame_jets(Space space, const CoordJets& jets, double s,
                          double curvature_tol) {
    if (jets.y.order() < 2)
        throw InputError("frame construction needs coordinate jets of order >= 2");
    switch (space) {
    case Space::G3:
        return frame_jets_g3(jets, s, curvature_tol);
    case Space::PG3_TypeI:
        return frame_jets_pg1(jets, s, curvature_tol);
    case Space::PG3_TypeII:
        return frame_jets_pg2(jets, curvature_tol);
    }
    throw InputError("unknown space");
}

InvariantSample invariants_at(const Curve& curve, double s) {
    require_order(curve, 3, "invariant evaluation");
    CoordJets jets = curve.jets_at(s, 3);
    FrameJets f = make_frame_jets(curve.space(), jets, s,
                                  curve.tolerances().curvature);
    if (!f.tau)
        throw DegenerateError("torsion undefined: sinh(phi) vanishes", s);
    InvariantSample out{s, f.kappa.value(), f.tau->value(), std::nullopt};
    if (f.phi)
        out.phi = f.phi->value();
    return out;
}

FrenetSample frame_at(const Curve& curve, double s) {
    require_order(curve, 3, "frame evaluation");
    CoordJets jets = curve.jets_at(s, 3);
    FrameJets f = make_frame_jets(curve.space(), jets, s,
                                  curve.tolerances().curvature);
    if (!f.tau)
        throw DegenerateError("torsion undefined: sinh(phi) vanishes", s);
    FrenetSample out{s,
                     Vec3{1.0, f.Ty.value(), f.Tz.value()},
                     Vec3{0.0, f.Ny.value(), f.Nz.value()},
                     Vec3{0.0, f.By.value(), f.Bz.value()},
                     f.kappa.value(),
                     f.tau->value(),
                     std::nullopt};
    if (f.phi)
        out.phi = f.phi->value();
    return out;
}

FrenetResidualRow frenet_residuals_at(const Curve& curve, double s) {
    require_order(curve, 4, "frame residual evaluation");
    CoordJets jets = curve.jets_at(s, 4);
    FrameJets f = make_frame_jets(curve.space(), jets, s,
                                  curve.tolerances().curvature);
    if (!f.tau)
        throw DegenerateError("torsion undefined: sinh(phi) vanishes", s);

    double kappa = f.kappa.value();
    double tau = f.tau->value();
    double Ny = f.Ny.value(), Nz = f.Nz.value();
    double By = f.By.value(), Bz = f.Bz.value();
    double dTy = f.Ty.deriv(1), dTz = f.Tz.deriv(1);
    double dNy = f.Ny.deriv(1), dNz = f.Nz.deriv(1);
    double dBy = f.By.deriv(1), dBz = f.Bz.deriv(1);

    double rT, rN, rB;
    switch (curve.space()) {
    case Space::G3:
        rT = norm2(dTy - kappa * Ny, dTz - kappa * Nz);
        rN = norm2(dNy - tau * By, dNz - tau * Bz);
        rB = norm2(dBy + tau * Ny, dBz + tau * Nz);
        break;
    case Space::PG3_TypeI:
        rT = norm2(dTy - kappa * Ny, dTz - kappa * Nz);
        rN = norm2(dNy - tau * By, dNz - tau * Bz);
        rB = norm2(dBy - tau * Ny, dBz - tau * Nz);
        break;
    case Space::PG3_TypeII: {
        double c = std::cosh(f.phi->value());
        double h = std::sinh(f.phi->value());
        rT = norm2(dTy - kappa * (c * Ny - h * By),
                   dTz - kappa * (c * Nz - h * Bz));
        rN = norm2(dNy - tau * By, dNz - tau * Bz);
        rB = norm2(dBy - tau * Ny, dBz - tau * Nz);
        break;
    }
    default:
        throw InputError("unknown space");
    }
    return FrenetResidualRow{s, rT, rN, rB};
}

std::vector<InvariantSample> invariants_grid(const Curve& curve) {
    std::vector<InvariantSample> out;
    for (double s : curve.interior_grid())
        out.push_back(invariants_at(curve, s));
    return out;
}

std::vector<FrenetResidualRow> frenet_residuals_grid(const Curve& curve) {
    std::vector<FrenetResidualRow> out;
    for (double s : curve.interior_grid())
        out.push_back(frenet_residuals_at(curve, s));
    return out;
}

} // namespace galmann
