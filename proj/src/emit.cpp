#include "rachaos/emit.hpp"

#include <cstdio>

namespace rachaos {

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    std::string out(buf);
    if (out.find_first_of(".eE") == std::string::npos &&
        out.find_first_of("0123456789") != std::string::npos) {
        out += ".0";
    }
    return out;
}

std::string emit_bifurcation_csv(std::span<const SweepPoint> points) {
    std::string out = "param,value\n";
    for (const SweepPoint& p : points)
        out += format_real(p.param_value) + "," + format_real(p.value) + "\n";
    return out;
}

std::string emit_attractor_csv(std::span<const MapState> points) {
    std::string out = "x,y\n";
    for (const MapState& p : points)
        out += format_real(p.x) + "," + format_real(p.y) + "\n";
    return out;
}

std::string emit_lyapunov_csv(std::span<const LyapunovSweepPoint> points) {
    std::string out = "param,le1,le2\n";
    for (const LyapunovSweepPoint& p : points)
        out += format_real(p.param_value) + "," + format_real(p.le.le1) + "," +
               format_real(p.le.le2) + "\n";
    return out;
}

std::string emit_metric_csv(std::span<const SweepPoint> points, std::string_view metric_name) {
    std::string out = "param," + std::string(metric_name) + "\n";
    for (const SweepPoint& p : points)
        out += format_real(p.param_value) + "," + format_real(p.value) + "\n";
    return out;
}

std::string emit_sensitivity_csv(const SensitivityResult& result) {
    std::string out = "iter,x_a,x_b\n";
    for (std::size_t i = 0; i < result.trajectory_a.size(); ++i)
        out += std::to_string(i + 1) + "," + format_real(result.trajectory_a[i].x) + "," +
               format_real(result.trajectory_b[i].x) + "\n";
    return out;
}

std::string emit_scatter_csv(std::span<const std::pair<std::uint8_t, std::uint8_t>> points) {
    std::string out = "gray_a,gray_b\n";
    for (const auto& [a, b] : points)
        out += std::to_string(a) + "," + std::to_string(b) + "\n";
    return out;
}

std::string emit_report_json(const MetricsReport& report) {
    const auto opt = [](const std::optional<double>& v) {
        return v ? format_real(*v) : std::string("null");
    };
    std::string out = "{\n";
    out += "  \"entropy\": " + format_real(report.entropy) + ",\n";
    out += "  \"cc_horizontal\": " + opt(report.cc_horizontal) + ",\n";
    out += "  \"cc_vertical\": " + opt(report.cc_vertical) + ",\n";
    out += "  \"cc_diagonal\": " + opt(report.cc_diagonal) + ",\n";
    out += "  \"npcr\": " + format_real(report.npcr_percent) + ",\n";
    out += "  \"histogram_std\": " + format_real(report.histogram_std) + ",\n";
    out += "  \"histogram\": [";
    for (std::size_t i = 0; i < report.histogram.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(report.histogram[i]);
    }
    out += "]\n}\n";
    return out;
}

}  // namespace rachaos
