#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rachaos/ra_map.hpp"

namespace rachaos {

// Any 2D map exposing a step and the Jacobian of its pre-mod right-hand
// side. The metrics below work on this interface so test maps with known
// exponents can be plugged in.
struct System2D {
    std::function<MapState(const MapState&)> step;
    std::function<Mat2(const MapState&)> jacobian;
    MapState initial{};
};

System2D ra_system(const MapParams& params);

// One map family swept over a single scalar parameter (used for bifurcation
// and metric sweeps).
using MapFamily = std::function<System2D(double)>;

enum class SweptParam { alpha, beta };

// RA-map family with one of alpha/beta swept; the grid value is rounded to
// the nearest non-negative integer since the map parameters are integers.
MapFamily ra_family(const MapParams& base, SweptParam swept);

// Inclusive arithmetic grid start, start+step, ..., stop.
struct SweepGrid {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
};

std::vector<double> grid_values(const SweepGrid& grid);

struct MetricConfig {
    std::size_t n_iterations = 5000;   // accumulation steps / series length
    std::size_t transient = 1000;      // discarded iterations before sampling
    double epsilon = 1.0 / 12.0;       // box width for the entropy estimate
    std::vector<double> r_grid;        // radii for the correlation integral;
                                       // empty means default_r_grid()
    std::size_t c_samples = 20;        // random phases for the 0-1 test
    std::uint64_t rng_seed = 42;
    std::size_t ke_block_max = 3;      // longest symbol block length
};

// Ten logarithmically spaced radii in [0.01, 0.1], sized for attractors
// living in the unit square.
std::vector<double> default_r_grid();

struct LyapunovPair {
    double le1 = 0.0;  // le1 >= le2
    double le2 = 0.0;
    std::size_t iterations = 0;
};

// Time-averaged log growth rates of the pre-mod Jacobian products,
// re-orthonormalized every step. Raw products overflow binary64 within a few
// dozen steps at bias = 1e8, so the QR-style accumulation is not optional.
LyapunovPair lyapunov_pair(const System2D& system, const MetricConfig& config);

// 0-1 chaos test: median over c_samples random phases of the log-log slope
// of the mean-square displacement of the translation variables (with the
// bounded mean-induced oscillation subtracted), clamped to [0, 1]. Values
// near 1 mean chaos, near 0 regular dynamics.
double zero_one_test(std::span<const double> series, const MetricConfig& config);

// Correlation dimension of the series embedded as consecutive pairs
// (Chebyshev metric): least-squares slope of ln C(R) against ln R over the
// radii with 0 < C(R) < 1.
double correlation_dimension(std::span<const double> series, const MetricConfig& config);

// Kolmogorov entropy estimate: quantize to boxes of width epsilon, compute
// block entropies K_n for n = 1..ke_block_max, return the mean increment
// K_{n+1} - K_n.
double kolmogorov_entropy(std::span<const double> series, const MetricConfig& config);

struct SensitivityResult {
    // First iteration (1-based) where |x - x'| exceeds the threshold;
    // nullopt when the trajectories never separate within max_iter.
    std::optional<std::size_t> divergence_iter;
    std::vector<MapState> trajectory_a;
    std::vector<MapState> trajectory_b;
};

// Twin trajectories from (x_init, y_init) and (x_init + delta, y_init).
SensitivityResult sensitivity_divergence(const MapParams& params, double delta,
                                         double threshold, std::size_t max_iter);

struct SweepPoint {
    double param_value = 0.0;
    double value = 0.0;
};

// Post-transient x-iterates (samples_per_param of them) for every parameter
// value on the grid.
std::vector<SweepPoint> bifurcation_sweep(const MapFamily& family, const SweepGrid& grid,
                                          std::size_t transient,
                                          std::size_t samples_per_param);

// Consecutive post-transient states of the RA map.
std::vector<MapState> attractor_points(const MapParams& params, std::size_t n_points,
                                       std::size_t transient);

struct LyapunovSweepPoint {
    double param_value = 0.0;
    LyapunovPair le;
};

// Grid sweeps of the metrics. Grid points are independent pure computations
// run on a small worker pool; results are always in grid order.
std::vector<LyapunovSweepPoint> lyapunov_sweep(const MapFamily& family,
                                               const SweepGrid& grid,
                                               const MetricConfig& config);

enum class SeriesMetric { zero_one, correlation_dimension, kolmogorov_entropy };

// Applies one series metric to the post-transient x-iterates at every grid
// point (series length = config.n_iterations).
std::vector<SweepPoint> series_metric_sweep(const MapFamily& family, const SweepGrid& grid,
                                            SeriesMetric metric,
                                            const MetricConfig& config);

}  // namespace rachaos
