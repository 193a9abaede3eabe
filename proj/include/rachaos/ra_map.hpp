#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace rachaos {

// Parameters of the RA map, a 2D hyper-chaotic map combining a
// Rastrigin-style cosine term with Ackley-style exponential terms.
// alpha/beta are non-negative integers (exactly representable in binary64);
// the large fixed bias drives the pre-mod magnitudes to ~1e8, which is what
// makes the fractional part behave chaotically.
struct MapParams {
    std::uint32_t alpha = 1;
    std::uint32_t beta = 1;
    double bias = 1e8;
    double x_init = 0.5;  // in (0, 1]
    double y_init = 0.5;  // in (0, 1]
};

// Throws std::invalid_argument if bias <= 0 or either initial value is
// outside (0, 1].
void validate(const MapParams& params);

// One map state; both coordinates live in [0, 1) after every step.
struct MapState {
    double x = 0.0;
    double y = 0.0;
};

// 2x2 Jacobian of the pre-mod map: d(fx,fy)/d(x,y).
struct Mat2 {
    double xx, xy;
    double yx, yy;
};

// t - floor(t), folded so the result is always in [0, 1).
double mod1(double t);

// Right-hand sides of the map before the mod-1 reduction. Magnitudes are
// ~bias, so binary64 keeps ~7-8 fractional digits; encrypt and decrypt must
// therefore run on the same build (see README).
std::pair<double, double> step_raw(const MapState& state, const MapParams& params);

// One iteration of the map. The y-equation's cosine coupling uses the input
// x, not the freshly computed one.
MapState step(const MapState& state, const MapParams& params);

// Analytic Jacobian of the pre-mod map. At x = y = 0 the radial exponential
// is not differentiable; its gradient is taken as 0 there (one-sided limit,
// measure-zero event).
Mat2 jacobian_raw(const MapState& state, const MapParams& params);

// Interleaved iterate sequence x1, y1, x2, y2, ... with every value in
// [0, 1). Deterministic function of (params, warmup, length).
struct ChaoticStream {
    std::vector<double> values;
    std::size_t warmup_count = 0;
};

ChaoticStream generate_stream(const MapParams& params, std::size_t warmup,
                              std::size_t length);

}  // namespace rachaos
