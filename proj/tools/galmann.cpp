#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "galmann/curve.hpp"
#include "galmann/errors.hpp"
#include "galmann/expression.hpp"
#include "galmann/frames.hpp"
#include "galmann/mannheim.hpp"
#include "galmann/numformat.hpp"
#include "galmann/report_json.hpp"
#include "galmann/spaces.hpp"
#include "galmann/synthesis.hpp"

namespace {

using galmann::Curve;
using galmann::Json;
using galmann::Space;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

Space parse_space_tag(const std::string& tag) {
    if (auto space = galmann::space_from_string(tag))
        return *space;
    throw galmann::InputError("unknown space '" + tag +
                              "' (expected G3, PG3-I, or PG3-II)");
}

std::vector<double> parse_number_list(const std::string& text,
                                      std::size_t count, const char* what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string field = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(field, &used));
            if (used != field.size())
                throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw galmann::InputError(std::string("bad number '") + field +
                                      "' in " + what);
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (out.size() != count)
        throw galmann::InputError(std::string(what) + " needs " +
                                  std::to_string(count) +
                                  " comma-separated numbers");
    return out;
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
            continue;
        return c == '{';
    }
    return false;
}

Curve curve_from_json_file(const std::string& path, const std::string& text) {
    Json spec;
    try {
        spec = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw galmann::InputError("cannot parse '" + path +
                                  "' as JSON: " + e.what());
    }
    if (!spec.is_object())
        throw galmann::InputError("curve file '" + path +
                                  "' must hold a JSON object");
    for (const auto& [key, value] : spec.items()) {
        (void)value;
        if (key != "space" && key != "y" && key != "z" && key != "phi" &&
            key != "domain" && key != "samples")
            throw galmann::InputError("unknown key '" + key + "' in '" + path +
                                      "'");
    }
    if (!spec.contains("space") || !spec["space"].is_string())
        throw galmann::InputError("curve file needs a string key 'space'");
    Space space = parse_space_tag(spec["space"].get<std::string>());
    if (!spec.contains("domain") || !spec["domain"].is_array() ||
        spec["domain"].size() != 2 || !spec["domain"][0].is_number() ||
        !spec["domain"][1].is_number())
        throw galmann::InputError(
            "curve file needs 'domain' as [s_min, s_max]");
    double s_min = spec["domain"][0].get<double>();
    double s_max = spec["domain"][1].get<double>();
    int samples = 201;
    if (spec.contains("samples")) {
        if (!spec["samples"].is_number_integer())
            throw galmann::InputError("'samples' must be an integer");
        samples = spec["samples"].get<int>();
    }
    auto expression_at = [&](const char* key) {
        if (!spec.contains(key) || !spec[key].is_string())
            throw galmann::InputError(std::string("curve file needs a string "
                                                  "key '") +
                                      key + "'");
        return galmann::Expression::parse(spec[key].get<std::string>());
    };
    std::optional<galmann::Expression> z, phi;
    if (space == Space::PG3_TypeII) {
        if (spec.contains("z"))
            throw galmann::InputError(
                "PG3-II curves live in the plane z == 0; drop 'z'");
        phi = expression_at("phi");
    } else {
        if (spec.contains("phi"))
            throw galmann::InputError("'phi' applies only to PG3-II curves");
        z = expression_at("z");
    }
    return Curve::from_expressions(space, expression_at("y"), std::move(z),
                                   std::move(phi), s_min, s_max, samples);
}

Curve load_curve(const std::string& path,
                 const std::optional<std::string>& space_flag) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw galmann::InputError("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (looks_like_json(text)) {
        Curve curve = curve_from_json_file(path, text);
        if (space_flag &&
            parse_space_tag(*space_flag) != curve.space())
            throw galmann::InputError(
                "--space " + *space_flag + " conflicts with the " +
                to_string(curve.space()) + " curve in '" + path + "'");
        return curve;
    }
    if (!space_flag)
        throw galmann::InputError("CSV input needs --space");
    return Curve::from_samples(parse_space_tag(*space_flag),
                               galmann::read_sample_table_csv(path));
}

struct InvariantRow {
    double s;
    double kappa;
    std::optional<double> tau;
    std::optional<double> phi;
};

InvariantRow invariant_row(const Curve& curve, double s) {
    galmann::CoordJets jets = curve.jets_at(s, 3);
    InvariantRow row{s, 0.0, std::nullopt, std::nullopt};
    try {
        galmann::FrameJets f = galmann::make_frame_jets(
            curve.space(), jets, s, curve.tolerances().curvature);
        row.kappa = f.kappa.value();
        if (f.tau)
            row.tau = f.tau->value();
        if (f.phi)
            row.phi = f.phi->value();
        return row;
    } catch (const galmann::DegenerateError&) {
    }
    double y2 = jets.y.deriv(2);
    double z2 = jets.z.deriv(2);
    switch (curve.space()) {
    case Space::G3:
        row.kappa = std::hypot(y2, z2);
        break;
    case Space::PG3_TypeI:
        row.kappa = std::sqrt(std::abs(y2 * y2 - z2 * z2));
        break;
    case Space::PG3_TypeII:
        row.kappa = y2;
        row.phi = jets.phi->value();
        break;
    }
    return row;
}

void write_invariants_csv(const std::string& path, Space space,
                          const std::vector<InvariantRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw galmann::InputError("cannot write '" + path + "'");
    bool with_phi = space == Space::PG3_TypeII;
    out << (with_phi ? "s,kappa,tau,phi" : "s,kappa,tau") << "\n";
    for (const InvariantRow& row : rows) {
        out << galmann::format_double(row.s) << ','
            << galmann::format_double(row.kappa) << ',';
        if (row.tau)
            out << galmann::format_double(*row.tau);
        if (with_phi)
            out << ',' << galmann::format_double(row.phi.value_or(0.0));
        out << '\n';
    }
}

void write_residuals_csv(const std::string& path,
                         const std::vector<galmann::FrenetResidualRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw galmann::InputError("cannot write '" + path + "'");
    out << "s,residual_T,residual_N,residual_B\n";
    for (const galmann::FrenetResidualRow& row : rows)
        out << galmann::format_double(row.s) << ','
            << galmann::format_double(row.rT) << ','
            << galmann::format_double(row.rN) << ','
            << galmann::format_double(row.rB) << '\n';
}

struct CommonOptions {
    std::string file;
    std::optional<std::string> space;
    std::optional<double> tolerance;
    std::optional<std::string> out;
};

Json inputs_for(const CommonOptions& opt) {
    Json j;
    j["file"] = opt.file;
    if (opt.space)
        j["space"] = *opt.space;
    if (opt.tolerance)
        j["tolerance"] = *opt.tolerance;
    if (opt.out)
        j["out"] = *opt.out;
    return j;
}

int emit(const std::string& command, const Json& inputs, const Json& result) {
    Json envelope;
    envelope["command"] = command;
    envelope["inputs"] = inputs;
    envelope["result"] = result;
    envelope["status"] = "ok";
    std::cout << envelope.dump(2) << "\n";
    return kExitOk;
}

int emit_error(const std::string& command, const Json& inputs,
               const std::string& type, const std::string& message,
               int code) {
    Json envelope;
    envelope["command"] = command;
    envelope["inputs"] = inputs;
    envelope["status"] = "error";
    envelope["error"] = Json{{"type", type}, {"message", message}};
    std::cout << envelope.dump(2) << "\n";
    return code;
}

int run_classify(Json& inputs, const std::string& vector_text,
                 std::optional<double> tol) {
    inputs["vector"] = vector_text;
    if (tol)
        inputs["tolerance"] = *tol;
    std::vector<double> v = parse_number_list(vector_text, 3, "--vector");
    galmann::Vec3 vec{v[0], v[1], v[2]};
    galmann::VectorClass cls =
        galmann::classify_vector(vec, tol.value_or(galmann::kSpaceTol));
    Json result;
    result["class"] = galmann::to_string(cls);
    result["norm"] = galmann::pg_norm(vec);
    return emit("classify", inputs, result);
}

int run_invariants(Json& inputs, const CommonOptions& opt,
                   std::optional<double> at) {
    inputs = inputs_for(opt);
    if (at)
        inputs["at"] = *at;
    Curve curve = load_curve(opt.file, opt.space);
    if (at) {
        Json result;
        result["curve"] = galmann::curve_summary(curve);
        result["sample"] = to_json(galmann::frame_at(curve, *at));
        return emit("invariants", inputs, result);
    }
    std::vector<InvariantRow> rows;
    std::size_t degenerate_rows = 0;
    for (double s : curve.interior_grid()) {
        rows.push_back(invariant_row(curve, s));
        if (!rows.back().tau)
            ++degenerate_rows;
    }
    Json result;
    result["curve"] = galmann::curve_summary(curve);
    result["rows"] = rows.size();
    result["degenerate_rows"] = degenerate_rows;
    if (opt.out) {
        write_invariants_csv(*opt.out, curve.space(), rows);
        result["csv"] = *opt.out;
    } else {
        Json data = Json::array();
        for (const InvariantRow& row : rows) {
            Json r;
            r["s"] = row.s;
            r["kappa"] = row.kappa;
            r["tau"] = row.tau ? Json(*row.tau) : Json(nullptr);
            if (row.phi)
                r["phi"] = *row.phi;
            data.push_back(std::move(r));
        }
        result["data"] = std::move(data);
    }
    return emit("invariants", inputs, result);
}

int run_residuals(Json& inputs, const CommonOptions& opt) {
    inputs = inputs_for(opt);
    Curve curve = load_curve(opt.file, opt.space);
    std::vector<galmann::FrenetResidualRow> rows =
        galmann::frenet_residuals_grid(curve);
    double worst = 0.0;
    for (const galmann::FrenetResidualRow& row : rows)
        worst = std::max({worst, row.rT, row.rN, row.rB});
    Json result;
    result["curve"] = galmann::curve_summary(curve);
    result["rows"] = rows.size();
    result["max_residual"] = worst;
    if (opt.out) {
        write_residuals_csv(*opt.out, rows);
        result["csv"] = *opt.out;
    } else {
        Json data = Json::array();
        for (const galmann::FrenetResidualRow& row : rows)
            data.push_back(to_json(row));
        result["data"] = std::move(data);
    }
    return emit("residuals", inputs, result);
}

int run_mannheim(Json& inputs, const CommonOptions& opt) {
    inputs = inputs_for(opt);
    Curve curve = load_curve(opt.file, opt.space);
    galmann::MannheimReport report =
        galmann::mannheim_constant(curve, opt.tolerance);
    Json result;
    result["curve"] = galmann::curve_summary(curve);
    result["mannheim"] = to_json(report);
    return emit("mannheim", inputs, result);
}

int run_partner(Json& inputs, const CommonOptions& opt, double lambda) {
    inputs = inputs_for(opt);
    inputs["lambda"] = lambda;
    Curve curve = load_curve(opt.file, opt.space);
    galmann::PartnerResult partner = galmann::construct_partner(curve, lambda);
    Json result;
    result["curve"] = galmann::curve_summary(curve);
    result["partner"] = galmann::curve_summary(partner.partner);
    result["pair"] = to_json(partner.report);
    if (opt.out) {
        galmann::write_sample_table_csv(*opt.out, partner.partner.table());
        result["csv"] = *opt.out;
    }
    return emit("partner", inputs, result);
}

struct SynthesizeOptions {
    std::string space;
    std::string kappa;
    std::string tau;
    std::string domain;
    double step = 1e-3;
    double theta0 = 0.0;
    double y0 = 0.0, y1 = 0.0, z0 = 0.0, z1 = 0.0;
    std::string out;
};

int run_synthesize(Json& inputs, const SynthesizeOptions& opt) {
    inputs["space"] = opt.space;
    inputs["kappa"] = opt.kappa;
    inputs["tau"] = opt.tau;
    inputs["domain"] = opt.domain;
    inputs["step"] = opt.step;
    inputs["theta0"] = opt.theta0;
    inputs["y0"] = opt.y0;
    inputs["y1"] = opt.y1;
    inputs["z0"] = opt.z0;
    inputs["z1"] = opt.z1;
    inputs["out"] = opt.out;
    std::vector<double> domain = parse_number_list(opt.domain, 2, "--domain");
    galmann::SynthesisSpec spec{parse_space_tag(opt.space),
                                galmann::Expression::parse(opt.kappa),
                                galmann::Expression::parse(opt.tau),
                                opt.theta0,
                                opt.y0,
                                opt.y1,
                                opt.z0,
                                opt.z1,
                                domain[0],
                                domain[1],
                                opt.step};
    Curve curve = galmann::synthesize(spec);
    galmann::write_sample_table_csv(opt.out, curve.table());
    Json result;
    result["curve"] = galmann::curve_summary(curve);
    result["csv"] = opt.out;
    return emit("synthesize", inputs, result);
}

struct VerifyOptions {
    std::string theorem;
    std::vector<std::string> files;
    std::optional<std::string> space;
    std::optional<double> lambda;
    std::optional<int> epsilon;
    std::optional<double> tolerance;
};

void reject_flag(const std::optional<double>& flag, const char* name,
                 const char* theorem) {
    if (flag)
        throw galmann::InputError(std::string(name) +
                                  " does not apply to the " + theorem +
                                  " check");
}

int run_verify(Json& inputs, const VerifyOptions& opt) {
    inputs["theorem"] = opt.theorem;
    inputs["files"] = opt.files;
    if (opt.space)
        inputs["space"] = *opt.space;
    if (opt.lambda)
        inputs["lambda"] = *opt.lambda;
    if (opt.epsilon)
        inputs["epsilon"] = *opt.epsilon;
    if (opt.tolerance)
        inputs["tolerance"] = *opt.tolerance;

    if (opt.files.empty())
        throw galmann::InputError("verify needs at least one curve file");
    Curve first = load_curve(opt.files[0], opt.space);
    Json result;

    if (opt.theorem == "3.3" || opt.theorem == "4.4") {
        Space space = opt.theorem == "3.3" ? Space::G3 : Space::PG3_TypeI;
        if (opt.epsilon)
            throw galmann::InputError(
                "--epsilon applies to the closed-form check (4.5) only");
        double lambda = 0.0;
        Curve second = first;
        if (opt.files.size() == 2) {
            if (opt.lambda)
                throw galmann::InputError(
                    "give either a curve pair or --lambda, not both");
            second = load_curve(opt.files[1], opt.space);
            galmann::PairReport pair = galmann::verify_pair(first, second);
            result["pair"] = to_json(pair);
            if (!pair.lambda || std::abs(*pair.lambda) <= 1e-9)
                throw galmann::InputError(
                    "cannot recover a usable offset from this pair");
            lambda = *pair.lambda;
        } else if (opt.lambda) {
            lambda = *opt.lambda;
        } else {
            throw galmann::InputError(
                "the torsion-equation check needs --lambda or a curve pair");
        }
        result["ode"] = to_json(galmann::verify_partner_ode(second, lambda,
                                                            space));
        return emit("verify", inputs, result);
    }

    if (opt.files.size() != 1)
        throw galmann::InputError("the " + opt.theorem +
                                  " check takes exactly one curve file");

    if (opt.theorem == "4.2") {
        if (first.space() != Space::PG3_TypeI)
            throw galmann::InputError(
                "the Mannheim partner check runs in PG3-I");
        reject_flag(opt.lambda, "--lambda", "4.2");
        if (opt.epsilon)
            throw galmann::InputError(
                "--epsilon applies to the closed-form check (4.5) only");
        galmann::MannheimReport mrep =
            galmann::mannheim_constant(first, opt.tolerance);
        result["mannheim"] = to_json(mrep);
        if (mrep.verdict == galmann::MannheimVerdict::Mannheim) {
            result["direction"] = "partner";
            galmann::PartnerResult partner =
                galmann::construct_partner(first, *mrep.lambda);
            result["pair"] = to_json(partner.report);
        } else if (mrep.verdict == galmann::MannheimVerdict::NotMannheim) {
            result["direction"] = "sweep";
            Json sweep = Json::array();
            double min_residual = -1.0;
            for (double lambda :
                 {-2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0, 2.0}) {
                galmann::PartnerResult partner =
                    galmann::construct_partner(first, lambda);
                Json row;
                row["lambda"] = lambda;
                row["coincidence_residual"] =
                    partner.report.coincidence_residual;
                row["degenerate"] = partner.report.degenerate;
                sweep.push_back(std::move(row));
                if (!partner.report.degenerate &&
                    (min_residual < 0.0 ||
                     partner.report.coincidence_residual < min_residual))
                    min_residual = partner.report.coincidence_residual;
            }
            result["sweep"] = std::move(sweep);
            result["min_coincidence_residual"] = min_residual;
        } else {
            throw galmann::DegenerateError(
                "the Mannheim ratio is degenerate on this curve",
                first.s_min());
        }
        return emit("verify", inputs, result);
    }

    if (opt.theorem == "4.3") {
        if (first.space() != Space::PG3_TypeII)
            throw galmann::InputError(
                "the hyperbolic-angle Mannheim relation runs in PG3-II");
        reject_flag(opt.lambda, "--lambda", "4.3");
        if (opt.epsilon)
            throw galmann::InputError(
                "--epsilon applies to the closed-form check (4.5) only");
        result["mannheim"] =
            to_json(galmann::mannheim_constant(first, opt.tolerance));
        return emit("verify", inputs, result);
    }

    if (opt.theorem == "4.5") {
        if (!opt.lambda)
            throw galmann::InputError("the closed-form check needs --lambda");
        result["closed_form"] = to_json(galmann::closed_form_check(
            first, *opt.lambda, opt.epsilon.value_or(1)));
        return emit("verify", inputs, result);
    }

    if (opt.theorem == "prop") {
        reject_flag(opt.lambda, "--lambda", "helix");
        if (opt.epsilon)
            throw galmann::InputError(
                "--epsilon applies to the closed-form check (4.5) only");
        result["helix"] = to_json(galmann::helix_planar_check(first));
        return emit("verify", inputs, result);
    }

    throw galmann::InputError("unknown theorem '" + opt.theorem +
                              "' (expected 3.3, 4.2, 4.3, 4.4, 4.5, or prop)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frenet frames, invariants, and Mannheim partner checks "
                 "for curves in Galilean and pseudo-Galilean space"};
    app.require_subcommand(1);

    std::string vector_text;
    std::optional<double> classify_tol;
    CLI::App* classify = app.add_subcommand(
        "classify", "Classify a vector of the pseudo-Galilean space");
    classify->add_option("--vector", vector_text, "Components x,y,z")
        ->required();
    classify->add_option("--tolerance", classify_tol,
                         "Isotropy / lightlike tolerance");

    CommonOptions inv_opt;
    std::optional<double> inv_at;
    CLI::App* invariants = app.add_subcommand(
        "invariants", "Curvature and torsion along a curve");
    invariants->add_option("file", inv_opt.file, "Curve file (JSON or CSV)")
        ->required();
    invariants->add_option("--space", inv_opt.space, "Space tag for CSV input");
    invariants->add_option("--at", inv_at, "Report the frame at one s");
    invariants->add_option("--out", inv_opt.out, "Write rows to a CSV file");

    CommonOptions res_opt;
    CLI::App* residuals = app.add_subcommand(
        "residuals", "Frame-equation residuals along a curve");
    residuals->add_option("file", res_opt.file, "Curve file (JSON or CSV)")
        ->required();
    residuals->add_option("--space", res_opt.space, "Space tag for CSV input");
    residuals->add_option("--out", res_opt.out, "Write rows to a CSV file");

    CommonOptions man_opt;
    CLI::App* mannheim = app.add_subcommand(
        "mannheim", "Mannheim ratio constancy verdict for a curve");
    mannheim->add_option("file", man_opt.file, "Curve file (JSON or CSV)")
        ->required();
    mannheim->add_option("--space", man_opt.space, "Space tag for CSV input");
    mannheim->add_option("--tolerance", man_opt.tolerance,
                         "Constancy tolerance override");

    CommonOptions par_opt;
    double par_lambda = 0.0;
    CLI::App* partner = app.add_subcommand(
        "partner", "Construct the normal-offset partner curve");
    partner->add_option("file", par_opt.file, "Curve file (JSON or CSV)")
        ->required();
    partner->add_option("--lambda", par_lambda, "Offset along the normal")
        ->required();
    partner->add_option("--space", par_opt.space, "Space tag for CSV input");
    partner->add_option("--out", par_opt.out, "Write the partner table CSV");

    SynthesizeOptions syn_opt;
    CLI::App* synthesize = app.add_subcommand(
        "synthesize", "Integrate a curve from curvature and torsion");
    synthesize->add_option("--space", syn_opt.space, "G3 or PG3-I")
        ->required();
    synthesize->add_option("--kappa", syn_opt.kappa, "Curvature expression")
        ->required();
    synthesize->add_option("--tau", syn_opt.tau, "Torsion expression")
        ->required();
    synthesize->add_option("--domain", syn_opt.domain, "Interval s_min,s_max")
        ->required();
    synthesize->add_option("--step", syn_opt.step, "Grid step (default 1e-3)");
    synthesize->add_option("--theta0", syn_opt.theta0,
                           "Initial acceleration angle");
    synthesize->add_option("--y0", syn_opt.y0, "Initial y");
    synthesize->add_option("--y1", syn_opt.y1, "Initial y'");
    synthesize->add_option("--z0", syn_opt.z0, "Initial z");
    synthesize->add_option("--z1", syn_opt.z1, "Initial z'");
    synthesize->add_option("--out", syn_opt.out, "Output CSV path")
        ->required();

    VerifyOptions ver_opt;
    CLI::App* verify = app.add_subcommand(
        "verify", "Numeric checks of the Mannheim statements");
    verify
        ->add_option("--theorem", ver_opt.theorem,
                     "One of 3.3, 4.2, 4.3, 4.4, 4.5, prop")
        ->required();
    verify->add_option("files", ver_opt.files, "Curve file(s)")
        ->expected(1, 2);
    verify->add_option("--space", ver_opt.space, "Space tag for CSV input");
    verify->add_option("--lambda", ver_opt.lambda, "Partner offset");
    verify->add_option("--epsilon", ver_opt.epsilon, "Sign in the closed "
                                                     "form (+1 or -1)");
    verify->add_option("--tolerance", ver_opt.tolerance,
                       "Constancy tolerance override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    std::string command = app.get_subcommands().front()->get_name();
    Json inputs = Json::object();
    try {
        if (classify->parsed())
            return run_classify(inputs, vector_text, classify_tol);
        if (invariants->parsed())
            return run_invariants(inputs, inv_opt, inv_at);
        if (residuals->parsed())
            return run_residuals(inputs, res_opt);
        if (mannheim->parsed())
            return run_mannheim(inputs, man_opt);
        if (partner->parsed())
            return run_partner(inputs, par_opt, par_lambda);
        if (synthesize->parsed())
            return run_synthesize(inputs, syn_opt);
        if (verify->parsed())
            return run_verify(inputs, ver_opt);
        return kExitInput;
    } catch (const galmann::ParseError& e) {
        return emit_error(command, inputs, "parse", e.what(), kExitInput);
    } catch (const galmann::InputError& e) {
        return emit_error(command, inputs, "input", e.what(), kExitInput);
    } catch (const galmann::DegenerateError& e) {
        return emit_error(command, inputs, "degenerate", e.what(),
                          kExitDomain);
    } catch (const galmann::DomainError& e) {
        return emit_error(command, inputs, "domain", e.what(), kExitDomain);
    }
}
