#include "rachaos/ra_map.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rachaos {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void validate(const MapParams& params) {
    if (!(params.bias > 0.0) || !std::isfinite(params.bias))
        throw std::invalid_argument("map bias must be positive and finite");
    if (!(params.x_init > 0.0 && params.x_init <= 1.0))
        throw std::invalid_argument("x_init must be in (0, 1]");
    if (!(params.y_init > 0.0 && params.y_init <= 1.0))
        throw std::invalid_argument("y_init must be in (0, 1]");
}

double mod1(double t) {
    double f = t - std::floor(t);
    // Rounding can produce exactly 1.0 for t infinitesimally below an
    // integer; fold it back since 1 == 0 (mod 1).
    if (f >= 1.0) f = 0.0;
    return f;
}

std::pair<double, double> step_raw(const MapState& state, const MapParams& params) {
    const double a = static_cast<double>(params.alpha) + params.bias;
    const double b = static_cast<double>(params.beta) + params.bias;
    const double cos_x = std::cos(kTwoPi * state.x);
    const double cos_y = std::cos(kTwoPi * state.y);
    const double radial = std::sqrt(0.5 * state.x * state.x + 0.5 * state.y * state.y);

    const double fx = state.x * state.x - b * cos_x - a * std::exp(-0.2 * radial);
    const double fy = state.y * state.y - b * cos_y -
                      a * std::exp(0.5 * cos_x + 0.5 * cos_y) + std::numbers::e;
    return {fx, fy};
}

MapState step(const MapState& state, const MapParams& params) {
    const auto [fx, fy] = step_raw(state, params);
    return {mod1(fx), mod1(fy)};
}

Mat2 jacobian_raw(const MapState& state, const MapParams& params) {
    const double a = static_cast<double>(params.alpha) + params.bias;
    const double b = static_cast<double>(params.beta) + params.bias;
    const double sin_x = std::sin(kTwoPi * state.x);
    const double sin_y = std::sin(kTwoPi * state.y);
    const double cos_x = std::cos(kTwoPi * state.x);
    const double cos_y = std::cos(kTwoPi * state.y);
    const double radial = std::sqrt(0.5 * state.x * state.x + 0.5 * state.y * state.y);
    const double exp_radial = std::exp(-0.2 * radial);
    const double exp_cos = std::exp(0.5 * cos_x + 0.5 * cos_y);

    // d/dx of -a*exp(-0.2*radial) is +0.1*a*exp_radial*x/radial; the radial
    // gradient is zeroed at the origin.
    const double gx = radial > 0.0 ? 0.1 * state.x / radial : 0.0;
    const double gy = radial > 0.0 ? 0.1 * state.y / radial : 0.0;

    Mat2 j;
    j.xx = 2.0 * state.x + kTwoPi * b * sin_x + a * exp_radial * gx;
    j.xy = a * exp_radial * gy;
    j.yx = std::numbers::pi * a * exp_cos * sin_x;
    j.yy = 2.0 * state.y + kTwoPi * b * sin_y + std::numbers::pi * a * exp_cos * sin_y;
    return j;
}

ChaoticStream generate_stream(const MapParams& params, std::size_t warmup,
                              std::size_t length) {
    validate(params);
    ChaoticStream stream;
    stream.warmup_count = warmup;
    stream.values.reserve(length);

    MapState state{params.x_init, params.y_init};
    for (std::size_t i = 0; i < warmup; ++i) state = step(state, params);

    while (stream.values.size() < length) {
        state = step(state, params);
        stream.values.push_back(state.x);
        if (stream.values.size() < length) stream.values.push_back(state.y);
    }
    return stream;
}

}  // namespace rachaos
