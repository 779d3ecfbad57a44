#ifndef GALMANN_CURVE_HPP
#define GALMANN_CURVE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galmann/expression.hpp"
#include "galmann/jet.hpp"
#include "galmann/spaces.hpp"

namespace galmann {

/// Ambient space of a curve in arclength normal form x = s.
enum class Space { G3, PG3_TypeI, PG3_TypeII };

std::string to_string(Space space);
std::optional<Space> space_from_string(const std::string& tag);

/// Derivative towers of the curve coordinates at one parameter value.
/// The x coordinate is always the parameter itself, so its jet is
/// implicit: (s, 1, 0, ...).  `phi` is present only for PG3_TypeII
/// curves, whose normal field is given by a hyperbolic angle.
struct CoordJets {
    Jet y;
    Jet z;
    std::optional<Jet> phi;
};

/// Uniform samples (s, x, y, z) of a curve with x == s.
struct SampleTable {
    std::vector<double> s;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> z;

    std::size_t rows() const { return s.size(); }
    double spacing() const { return (s.back() - s.front()) / static_cast<double>(rows() - 1); }
};

SampleTable read_sample_table_csv(const std::string& path);
void write_sample_table_csv(const std::string& path, const SampleTable& table);

/// State of the curve-synthesis ODE at one grid point.
struct OdeStateRow {
    double s, y, yp, z, zp, theta;
};

/// Numerical tolerances, chosen by how the curve's derivatives are
/// obtained: jet-backed curves get the tight profile, finite-difference
/// ones the loose profile.
struct Tolerances {
    double curvature; // frame existence gate (also gates tau degeneracy)
    double invariant; // acceptance threshold for constancy / coincidence residuals

    static Tolerances jet_backed() { return {1e-9, 1e-6}; }
    static Tolerances sampled() { return {1e-5, 1e-3}; }
};

/// A curve in arclength normal form over a parameter interval, with one of
/// four derivative sources:
///   - closed-form coordinate expressions (jets to any order),
///   - a uniform sample table (central finite differences up to order 4),
///   - an ODE solution from curvature/torsion synthesis (jets through the
///     right-hand side of the ODE),
///   - a constant offset along another curve's principal normal (jets by
///     arithmetic on the base curve's jets).
class Curve {
public:
    static Curve from_expressions(Space space, Expression y,
                                  std::optional<Expression> z,
                                  std::optional<Expression> phi,
                                  double s_min, double s_max, int samples = 201);

    /// Validates and adopts a sample table (>= 9 rows, uniform spacing to
    /// 1e-9 relative, x == s).  Only G3 and PG3_TypeI curves can be
    /// ingested: a Type II curve is not determined by its trace.
    static Curve from_samples(Space space, SampleTable table);

    /// Adopts the state rows of an integrated curvature/torsion ODE.
    static Curve from_ode_solution(Space space, Expression kappa, Expression tau,
                                   std::vector<OdeStateRow> rows);

    /// The curve s -> this(s) + lambda * N(s).  Offsets along the
    /// principal normal keep x == s because N is isotropic.
    Curve offset_by_normal(double lambda) const;

    Space space() const;
    double s_min() const;
    double s_max() const;

    /// True when derivatives come from finite differences somewhere in the
    /// source chain; selects the loose tolerance profile.
    bool sampled_data() const;

    Tolerances tolerances() const {
        return sampled_data() ? Tolerances::sampled() : Tolerances::jet_backed();
    }

    /// Largest derivative order jets_at can honor.
    int max_jet_order() const;

    /// Parameter values the curve is defined on.
    std::vector<double> grid() const;

    /// Parameter values where jets are available (sampled curves lose a
    /// margin at each end where centered stencils do not fit).
    std::vector<double> interior_grid() const;

    /// True when `s` is a valid query point for jets_at.
    bool queryable_at(double s) const;

    /// Coordinate jets at s, at most min(order, max_jet_order()) deep.
    /// Expression curves accept any s in the domain; the other sources
    /// accept only grid rows (snapped within 1e-9).
    CoordJets jets_at(double s, int order) const;

    /// Position (s, y(s), z(s)).
    Vec3 point_at(double s) const;

    /// Uniform samples of the curve (for sampled sources, the rows
    /// themselves; for offsets, rows over the base interior grid).
    SampleTable table() const;

private:
    struct Impl;
    explicit Curve(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

} // namespace galmann

#endif
