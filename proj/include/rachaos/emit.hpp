#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rachaos/analysis.hpp"
#include "rachaos/chaos_metrics.hpp"

namespace rachaos {

// Reals are printed with 10 significant digits and always carry a decimal
// marker ("1.0", not "1"), so CSV columns and JSON values stay unambiguous.
std::string format_real(double value);

std::string emit_bifurcation_csv(std::span<const SweepPoint> points);
std::string emit_attractor_csv(std::span<const MapState> points);
std::string emit_lyapunov_csv(std::span<const LyapunovSweepPoint> points);
std::string emit_metric_csv(std::span<const SweepPoint> points, std::string_view metric_name);
std::string emit_sensitivity_csv(const SensitivityResult& result);
std::string emit_scatter_csv(std::span<const std::pair<std::uint8_t, std::uint8_t>> points);

std::string emit_report_json(const MetricsReport& report);

}  // namespace rachaos
