#include "galmann/curve.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <variant>

#include "galmann/errors.hpp"
#include "galmann/frames.hpp"
#include "galmann/numformat.hpp"

namespace galmann {

namespace {

constexpr double kGridSnapTol = 1e-9;
constexpr double kTargetStencilSpan = 0.016;
constexpr int kExpressionJetCap = 16;
constexpr int kFiniteDifferenceJetCap = 4;
constexpr int kStencilMargin = 3;

bool near_row(double s, double row) {
    return std::abs(s - row) <= kGridSnapTol * std::max(1.0, std::abs(s));
}

struct ExpressionSource {
    Expression y;
    std::optional<Expression> z;
    std::optional<Expression> phi;
    int samples;
};

struct SampleSource {
    SampleTable table;
    std::size_t stride;
};

struct SynthSource {
    Expression kappa;
    Expression tau;
    std::vector<OdeStateRow> rows;
};

struct OffsetSource {
    Curve base;
    double lambda;
};

std::size_t pick_stride(double spacing, std::size_t rows) {
    auto wanted = static_cast<std::size_t>(
        std::max(1.0, std::round(kTargetStencilSpan / spacing)));
    std::size_t cap = (rows - 1) / (2 * kStencilMargin);
    return std::min(wanted, std::max<std::size_t>(cap, 1));
}

std::optional<std::size_t> try_snap_to_row(double s, double s0, double h,
                                           std::size_t rows) {
    double t = std::nearbyint((s - s0) / h);
    double row = s0 + t * h;
    if (t < 0.0 || t >= static_cast<double>(rows) || !near_row(s, row))
        return std::nullopt;
    return static_cast<std::size_t>(t);
}

std::size_t snap_to_row(double s, double s0, double h, std::size_t rows,
                        const char* what) {
    if (auto i = try_snap_to_row(s, s0, h, rows))
        return *i;
    throw InputError(std::string(what) +
                     " can be queried only at grid rows (s = " +
                     format_double(s) + " is off the grid)");
}

} // namespace

struct Curve::Impl {
    Space space;
    double s0, s1;
    std::variant<ExpressionSource, SampleSource, SynthSource, OffsetSource> src;
};

std::string to_string(Space space) {
    switch (space) {
    case Space::G3:
        return "G3";
    case Space::PG3_TypeI:
        return "PG3-I";
    case Space::PG3_TypeII:
        return "PG3-II";
    }
    return "?";
}

std::optional<Space> space_from_string(const std::string& tag) {
    if (tag == "G3")
        return Space::G3;
    if (tag == "PG3-I")
        return Space::PG3_TypeI;
    if (tag == "PG3-II")
        return Space::PG3_TypeII;
    return std::nullopt;
}

Curve Curve::from_expressions(Space space, Expression y,
                              std::optional<Expression> z,
                              std::optional<Expression> phi,
                              double s_min, double s_max, int samples) {
    if (!(s_min < s_max))
        throw InputError("curve domain needs s_min < s_max");
    if (!std::isfinite(s_min) || !std::isfinite(s_max))
        throw InputError("curve domain must be finite");
    if (samples < 9)
        throw InputError("a curve needs at least 9 samples");
    if (space == Space::PG3_TypeII) {
        if (!phi)
            throw InputError("PG3-II curves need a phi expression");
        if (z)
            throw InputError("PG3-II curves live in the plane z == 0; drop z");
    } else {
        if (!z)
            throw InputError(to_string(space) + " curves need a z expression");
        if (phi)
            throw InputError("phi applies only to PG3-II curves");
    }
    auto impl = std::make_shared<Impl>(
        Impl{space, s_min, s_max,
             ExpressionSource{std::move(y), std::move(z), std::move(phi),
                              samples}});
    return Curve(std::move(impl));
}

Curve Curve::from_samples(Space space, SampleTable table) {
    if (space == Space::PG3_TypeII)
        throw InputError("PG3-II curves cannot be ingested from samples: "
                         "the trace does not determine phi");
    std::size_t n = table.s.size();
    if (table.x.size() != n || table.y.size() != n || table.z.size() != n)
        throw InputError("sample table columns have mismatched lengths");
    if (n < 9)
        throw InputError("a sample table needs at least 9 rows");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(table.s[i]) || !std::isfinite(table.x[i]) ||
            !std::isfinite(table.y[i]) || !std::isfinite(table.z[i]))
            throw InputError("non-finite value in sample row " +
                             std::to_string(i));
        if (!near_row(table.x[i], table.s[i]))
            throw InputError("sample row " + std::to_string(i) +
                             " has x != s; curves must be in arclength "
                             "normal form");
    }
    if (!(table.s.back() > table.s.front()))
        throw InputError("sample rows must increase in s");
    double h = table.spacing();
    for (std::size_t i = 0; i < n; ++i) {
        if (!near_row(table.s[i], table.s.front() + static_cast<double>(i) * h))
            throw InputError("sample spacing is not uniform at row " +
                             std::to_string(i));
    }
    double s0 = table.s.front();
    double s1 = table.s.back();
    std::size_t stride = pick_stride(h, n);
    auto impl = std::make_shared<Impl>(
        Impl{space, s0, s1, SampleSource{std::move(table), stride}});
    return Curve(std::move(impl));
}

Curve Curve::from_ode_solution(Space space, Expression kappa, Expression tau,
                               std::vector<OdeStateRow> rows) {
    if (space == Space::PG3_TypeII)
        throw InputError("curve synthesis covers G3 and PG3-I only");
    if (rows.size() < 9)
        throw InputError("an integrated curve needs at least 9 rows");
    double s0 = rows.front().s;
    double s1 = rows.back().s;
    double h = (s1 - s0) / static_cast<double>(rows.size() - 1);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!near_row(rows[i].s, s0 + static_cast<double>(i) * h))
            throw InputError("integrated rows are not uniformly spaced");
    auto impl = std::make_shared<Impl>(
        Impl{space, s0, s1,
             SynthSource{std::move(kappa), std::move(tau), std::move(rows)}});
    return Curve(std::move(impl));
}

Curve Curve::offset_by_normal(double lambda) const {
    if (impl_->space == Space::PG3_TypeII)
        throw InputError("normal offsets are defined for G3 and PG3-I curves");
    if (!std::isfinite(lambda))
        throw InputError("offset distance must be finite");
    if (max_jet_order() < 4)
        throw InputError("normal offsets need a base curve with derivative "
                         "order >= 4");
    auto impl = std::make_shared<Impl>(
        Impl{impl_->space, impl_->s0, impl_->s1, OffsetSource{*this, lambda}});
    return Curve(std::move(impl));
}

Space Curve::space() const { return impl_->space; }
double Curve::s_min() const { return impl_->s0; }
double Curve::s_max() const { return impl_->s1; }

bool Curve::sampled_data() const {
    if (std::holds_alternative<SampleSource>(impl_->src))
        return true;
    if (const auto* off = std::get_if<OffsetSource>(&impl_->src))
        return off->base.sampled_data();
    return false;
}

int Curve::max_jet_order() const {
    if (std::holds_alternative<SampleSource>(impl_->src))
        return kFiniteDifferenceJetCap;
    if (const auto* off = std::get_if<OffsetSource>(&impl_->src))
        return off->base.max_jet_order() - 2;
    return kExpressionJetCap;
}

std::vector<double> Curve::grid() const {
    if (const auto* expr = std::get_if<ExpressionSource>(&impl_->src)) {
        std::vector<double> out(static_cast<std::size_t>(expr->samples));
        double span = impl_->s1 - impl_->s0;
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = impl_->s0 + span * static_cast<double>(i) /
                                     static_cast<double>(expr->samples - 1);
        out.back() = impl_->s1;
        return out;
    }
    if (const auto* smp = std::get_if<SampleSource>(&impl_->src))
        return smp->table.s;
    if (const auto* ode = std::get_if<SynthSource>(&impl_->src)) {
        std::vector<double> out;
        out.reserve(ode->rows.size());
        for (const OdeStateRow& r : ode->rows)
            out.push_back(r.s);
        return out;
    }
    return std::get<OffsetSource>(impl_->src).base.interior_grid();
}

std::vector<double> Curve::interior_grid() const {
    if (const auto* smp = std::get_if<SampleSource>(&impl_->src)) {
        std::size_t margin = kStencilMargin * smp->stride;
        std::vector<double> out(smp->table.s.begin() +
                                    static_cast<std::ptrdiff_t>(margin),
                                smp->table.s.end() -
                                    static_cast<std::ptrdiff_t>(margin));
        return out;
    }
    return grid();
}

bool Curve::queryable_at(double s) const {
    if (std::holds_alternative<ExpressionSource>(impl_->src))
        return s >= impl_->s0 - kGridSnapTol * std::max(1.0, std::abs(s)) &&
               s <= impl_->s1 + kGridSnapTol * std::max(1.0, std::abs(s));
    if (const auto* off = std::get_if<OffsetSource>(&impl_->src))
        return off->base.queryable_at(s);
    if (const auto* smp = std::get_if<SampleSource>(&impl_->src)) {
        auto i = try_snap_to_row(s, impl_->s0, smp->table.spacing(),
                                 smp->table.rows());
        std::size_t margin = kStencilMargin * smp->stride;
        return i && *i >= margin && *i + margin < smp->table.rows();
    }
    const auto& ode = std::get<SynthSource>(impl_->src);
    double h =
        (impl_->s1 - impl_->s0) / static_cast<double>(ode.rows.size() - 1);
    return try_snap_to_row(s, impl_->s0, h, ode.rows.size()).has_value();
}

namespace {

Jet finite_difference_jet(const std::vector<double>& col, std::size_t i,
                          std::size_t stride, double h, int order) {
    auto f = [&](int k) {
        return col[i + static_cast<std::size_t>(
                           static_cast<std::ptrdiff_t>(stride) * k)];
    };
    auto fm = [&](int k) {
        return col[i - static_cast<std::size_t>(
                           static_cast<std::ptrdiff_t>(stride) * k)];
    };
    double H = static_cast<double>(stride) * h;
    Jet jet(order);
    jet[0] = f(0);
    if (order >= 1)
        jet[1] = (fm(2) - 8.0 * fm(1) + 8.0 * f(1) - f(2)) / (12.0 * H);
    if (order >= 2)
        jet[2] = (-fm(2) + 16.0 * fm(1) - 30.0 * f(0) + 16.0 * f(1) - f(2)) /
                 (12.0 * H * H);
    if (order >= 3)
        jet[3] = ((fm(3) - f(3)) / 8.0 + (f(2) - fm(2)) +
                  13.0 * (fm(1) - f(1)) / 8.0) /
                 (H * H * H);
    if (order >= 4)
        jet[4] = (-(fm(3) + f(3)) / 6.0 + 2.0 * (fm(2) + f(2)) -
                  6.5 * (fm(1) + f(1)) + (28.0 / 3.0) * f(0)) /
                 (H * H * H * H);
    return jet;
}

Jet ode_theta_jet(const Expression& tau, double s, double theta0, int order) {
    Jet th(order);
    th[0] = theta0;
    if (order >= 1) {
        Jet tj = tau.eval_jet(s, order - 1);
        for (int k = 1; k <= order; ++k)
            th[k] = tj.deriv(k - 1);
    }
    return th;
}

CoordJets ode_jets(Space space, const SynthSource& src, const OdeStateRow& row,
                   int order) {
    Jet y(order), z(order);
    y[0] = row.y;
    z[0] = row.z;
    if (order >= 1) {
        y[1] = row.yp;
        z[1] = row.zp;
    }
    if (order >= 2) {
        int m = order - 2;
        Jet kj = src.kappa.eval_jet(row.s, m);
        Jet th = ode_theta_jet(src.tau, row.s, row.theta, m);
        Jet y2 = kj * (space == Space::G3 ? cos(th) : cosh(th));
        Jet z2 = kj * (space == Space::G3 ? sin(th) : sinh(th));
        for (int k = 0; k <= m; ++k) {
            y[k + 2] = y2.deriv(k);
            z[k + 2] = z2.deriv(k);
        }
    }
    return CoordJets{y, z, std::nullopt};
}

} // namespace

CoordJets Curve::jets_at(double s, int order) const {
    order = std::clamp(order, 0, max_jet_order());
    if (const auto* expr = std::get_if<ExpressionSource>(&impl_->src)) {
        if (!queryable_at(s))
            throw InputError("query at s = " + format_double(s) +
                             " lies outside the curve domain [" +
                             format_double(impl_->s0) + ", " +
                             format_double(impl_->s1) + "]");
        Jet y = expr->y.eval_jet(s, order);
        if (impl_->space == Space::PG3_TypeII)
            return CoordJets{y, Jet(order), expr->phi->eval_jet(s, order)};
        return CoordJets{y, expr->z->eval_jet(s, order), std::nullopt};
    }
    if (const auto* smp = std::get_if<SampleSource>(&impl_->src)) {
        const SampleTable& t = smp->table;
        double h = t.spacing();
        std::size_t i =
            snap_to_row(s, t.s.front(), h, t.rows(), "sampled curves");
        std::size_t margin = kStencilMargin * smp->stride;
        if (i < margin || i + margin >= t.rows())
            throw InputError(
                "query at s = " + format_double(s) +
                " lies outside the finite-difference interior (rows " +
                std::to_string(margin) + ".." +
                std::to_string(t.rows() - 1 - margin) + ")");
        return CoordJets{finite_difference_jet(t.y, i, smp->stride, h, order),
                         finite_difference_jet(t.z, i, smp->stride, h, order),
                         std::nullopt};
    }
    if (const auto* ode = std::get_if<SynthSource>(&impl_->src)) {
        double h = (impl_->s1 - impl_->s0) /
                   static_cast<double>(ode->rows.size() - 1);
        std::size_t i = snap_to_row(s, impl_->s0, h, ode->rows.size(),
                                    "integrated curves");
        return ode_jets(impl_->space, *ode, ode->rows[i], order);
    }
    const auto& off = std::get<OffsetSource>(impl_->src);
    CoordJets base = off.base.jets_at(s, order + 2);
    FrameJets f = make_frame_jets(off.base.space(), base, s,
                                  off.base.tolerances().curvature);
    return CoordJets{base.y + off.lambda * f.Ny, base.z + off.lambda * f.Nz,
                     std::nullopt};
}

Vec3 Curve::point_at(double s) const {
    CoordJets jets = jets_at(s, 0);
    return Vec3{s, jets.y.value(), jets.z.value()};
}

SampleTable Curve::table() const {
    if (const auto* smp = std::get_if<SampleSource>(&impl_->src))
        return smp->table;
    SampleTable out;
    for (double s : grid()) {
        Vec3 p = point_at(s);
        out.s.push_back(s);
        out.x.push_back(s);
        out.y.push_back(p.y);
        out.z.push_back(p.z);
    }
    return out;
}

namespace {

std::string trim(const std::string& text) {
    std::size_t a = text.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = text.find_last_not_of(" \t\r");
    return text.substr(a, b - a + 1);
}

double parse_field(const std::string& field, std::size_t row) {
    std::string t = trim(field);
    double out = 0.0;
    const char* begin = t.data();
    const char* end = begin + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr != end)
        throw InputError("bad number '" + t + "' in data row " +
                         std::to_string(row));
    return out;
}

} // namespace

SampleTable read_sample_table_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || trim(line) != "s,x,y,z")
        throw InputError("expected CSV header 's,x,y,z' in '" + path + "'");
    SampleTable table;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty())
            continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<double> vals;
        while (std::getline(ss, field, ','))
            vals.push_back(parse_field(field, row));
        if (vals.size() != 4)
            throw InputError("data row " + std::to_string(row) + " has " +
                             std::to_string(vals.size()) +
                             " fields, expected 4");
        table.s.push_back(vals[0]);
        table.x.push_back(vals[1]);
        table.y.push_back(vals[2]);
        table.z.push_back(vals[3]);
        ++row;
    }
    if (table.rows() == 0)
        throw InputError("'" + path + "' has no data rows");
    return table;
}

void write_sample_table_csv(const std::string& path, const SampleTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << "s,x,y,z\n";
    for (std::size_t i = 0; i < table.rows(); ++i)
        out << format_double(table.s[i]) << ',' << format_double(table.x[i])
            << ',' << format_double(table.y[i]) << ','
            << format_double(table.z[i]) << '\n';
}

} // namespace galmann
