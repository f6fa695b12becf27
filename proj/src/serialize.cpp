#include "dfnls/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <stdexcept>

namespace dfnls {

namespace {

nlohmann::ordered_json finite_or_null(double value) {
    if (std::isfinite(value)) return value;
    return nullptr;
}

}  // namespace

nlohmann::ordered_json profile_json(const WaveProfile& wave) {
    nlohmann::ordered_json j;
    j["s"] = wave.s;
    j["omega"] = wave.omega;
    j["n_modes"] = wave.field.grid->n_modes();
    j["residual_norm"] = wave.residual_norm;
    j["values"] = std::vector<double>(wave.field.values.begin(), wave.field.values.end());
    return j;
}

WaveProfile profile_from_json(const nlohmann::ordered_json& j) {
    WaveProfile wave;
    wave.s = j.at("s").get<double>();
    wave.omega = j.at("omega").get<double>();
    wave.residual_norm = j.at("residual_norm").get<double>();
    const auto values = j.at("values").get<std::vector<double>>();
    const auto n = j.at("n_modes").get<Eigen::Index>();
    if (static_cast<Eigen::Index>(values.size()) != n)
        throw std::invalid_argument("profile_from_json: value count does not match n_modes");
    wave.field.grid = PeriodicGrid::make(n);
    wave.field.values = Eigen::Map<const Eigen::ArrayXd>(values.data(), n);
    return wave;
}

nlohmann::ordered_json spectrum_json(const SpectrumReport& report, int keep) {
    nlohmann::ordered_json j;
    j["kind"] = operator_kind_name(report.kind);
    j["parity"] = parity_name(report.parity);
    j["s"] = report.s;
    j["omega"] = report.omega;
    j["kernel_tol"] = report.kernel_tol;
    j["basis_dim"] = report.basis_dim;
    j["n_neg"] = report.n_neg;
    j["n_zero"] = report.n_zero;
    j["ambiguous"] = report.ambiguous;
    const int m = std::min<int>(keep, static_cast<int>(report.eigenvalues.size()));
    j["eigenvalues"] = std::vector<double>(report.eigenvalues.begin(),
                                           report.eigenvalues.begin() + m);
    return j;
}

nlohmann::ordered_json krein_json(const KreinReport& report) {
    nlohmann::ordered_json j;
    j["s"] = report.s;
    j["omega"] = report.omega;
    j["v_odd"] = report.v_odd;
    j["v_even"] = report.v_even;
    j["n_L_odd"] = report.n_l_odd;
    j["n_L_even"] = report.n_l_even;
    j["n_L_full"] = report.n_l_full;
    j["n_V_odd"] = report.n_v_odd;
    j["n_V_even"] = report.n_v_even;
    j["n_V_full"] = report.n_v_full;
    j["verdict"] = verdict_name(report.verdict);
    j["dnorm_domega"] = finite_or_null(report.dnorm_domega);
    j["provenance"] = {
        {"n_modes", report.provenance.n_modes},
        {"basis_cutoff", report.provenance.basis_cutoff},
        {"newton_tol", report.provenance.newton_tol},
        {"gmres_tol", report.provenance.gmres_tol},
        {"kernel_tol", report.provenance.kernel_tol},
        {"fd_step", report.provenance.fd_step},
        {"newton_iters", report.provenance.newton_iters},
    };
    return j;
}

void write_profile_csv(std::ostream& out, const WaveProfile& wave) {
    out << "x,phi\n";
    const Eigen::ArrayXd& x = wave.field.grid->points();
    for (Eigen::Index j = 0; j < x.size(); ++j)
        out << format_full(x[j]) << ',' << format_full(wave.field.values[j]) << '\n';
}

nlohmann::ordered_json manifest_json(const RunManifest& manifest) {
    nlohmann::ordered_json j;
    j["command"] = manifest.command;
    j["parameters"] = manifest.parameters;  // std::map iterates in key order
    j["output_dir"] = manifest.output_dir;
    j["timestamp"] = manifest.timestamp;
    j["artifact_paths"] = manifest.artifact_paths;
    return j;
}

std::string iso8601_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::string format_full(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace dfnls
