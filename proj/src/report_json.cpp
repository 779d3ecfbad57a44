#include "galmann/report_json.hpp"

namespace galmann {

namespace {

Json vec_json(const Vec3& v) {
    return Json::array({v.x + 0.0, v.y + 0.0, v.z + 0.0});
}

Json opt_json(const std::optional<double>& v) {
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json to_json(const InvariantSample& sample) {
    Json j;
    j["s"] = sample.s;
    j["kappa"] = sample.kappa;
    j["tau"] = sample.tau;
    if (sample.phi)
        j["phi"] = *sample.phi;
    return j;
}

Json to_json(const FrenetSample& sample) {
    Json j;
    j["s"] = sample.s;
    j["T"] = vec_json(sample.T);
    j["N"] = vec_json(sample.N);
    j["B"] = vec_json(sample.B);
    j["kappa"] = sample.kappa;
    j["tau"] = sample.tau;
    if (sample.phi)
        j["phi"] = *sample.phi;
    return j;
}

Json to_json(const FrenetResidualRow& row) {
    Json j;
    j["s"] = row.s;
    j["residual_T"] = row.rT;
    j["residual_N"] = row.rN;
    j["residual_B"] = row.rB;
    return j;
}

Json to_json(const MannheimReport& report) {
    Json j;
    j["space"] = to_string(report.space);
    j["verdict"] = to_string(report.verdict);
    j["c_estimate"] = opt_json(report.c_estimate);
    j["c_residual"] = report.c_residual;
    j["lambda"] = opt_json(report.lambda);
    j["grid_points"] = report.grid_points;
    j["degenerate_points"] = report.degenerate_points;
    j["tolerance"] = report.tolerance;
    return j;
}

Json to_json(const PairReport& report) {
    Json j;
    j["coincidence_residual"] = report.coincidence_residual;
    j["lambda"] = opt_json(report.lambda);
    j["lambda_residual"] = report.lambda_residual;
    j["degenerate"] = report.degenerate;
    j["accepted"] = report.accepted;
    j["grid_points"] = report.grid_points;
    j["skipped_points"] = report.skipped_points;
    j["tolerance"] = report.tolerance;
    j["warnings"] = report.warnings;
    return j;
}

Json to_json(const OdeReport& report) {
    Json j;
    j["space"] = to_string(report.space);
    j["lambda"] = report.lambda;
    j["printed_form_residual"] = report.printed_form_residual;
    j["linear_form_residual"] = report.linear_form_residual;
    j["grid_points"] = report.grid_points;
    return j;
}

Json to_json(const ClosedFormReport& report) {
    Json j;
    j["space"] = to_string(report.space);
    j["lambda"] = report.lambda;
    j["epsilon"] = report.epsilon;
    j["tan_residual"] = opt_json(report.tan_residual);
    j["tanh_residual"] = report.tanh_residual;
    j["tan_c0"] = report.tan_c0;
    j["tanh_c0"] = report.tanh_c0;
    j["tan_masked_points"] = report.tan_masked_points;
    j["grid_points"] = report.grid_points;
    return j;
}

Json to_json(const HelixReport& report) {
    Json j;
    j["is_helix"] = report.is_helix;
    j["ratio"] = opt_json(report.ratio);
    j["ratio_residual"] = report.ratio_residual;
    j["partner_degenerate"] = report.partner_degenerate;
    j["planarity_residual"] = opt_json(report.planarity_residual);
    j["satisfied"] = report.satisfied;
    j["tolerance"] = report.tolerance;
    return j;
}

Json curve_summary(const Curve& curve) {
    Json j;
    j["space"] = to_string(curve.space());
    j["s_min"] = curve.s_min();
    j["s_max"] = curve.s_max();
    j["grid_points"] = curve.grid().size();
    j["sampled_data"] = curve.sampled_data();
    return j;
}

} // namespace galmann
