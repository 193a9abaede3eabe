#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "rachaos/ra_map.hpp"

using namespace rachaos;

TEST_CASE("mod1 stays in [0,1) for either sign") {
    CHECK(mod1(3.5) == doctest::Approx(0.5));
    CHECK(mod1(-0.25) == doctest::Approx(0.75));
    CHECK(mod1(0.0) == 0.0);
    CHECK(mod1(-7.0) == 0.0);
    // True value is 1 - 1e-300, which rounds to 1.0; folded back to 0.
    CHECK(mod1(-1e-300) == 0.0);
}

TEST_CASE("step matches the closed form at (0.5, 0.5), alpha=beta=1") {
    const MapParams params{1, 1, 1e8, 0.5, 0.5};
    const auto [fx, fy] = step_raw(MapState{0.5, 0.5}, params);

    // 0.25 + (1e8+1) - (1e8+1)*exp(-0.1) and
    // 0.25 + (1e8+1) - (1e8+1)*exp(-1) + e, evaluated with 60-digit
    // arithmetic. binary64 keeps ~1e-8 of the 1e8-magnitude raw values.
    CHECK(fx == doctest::Approx(9516258.541566624647615521).epsilon(1e-12));
    CHECK(fy == doctest::Approx(63212059.48325815512805054).epsilon(1e-12));

    const MapState next = step(MapState{0.5, 0.5}, params);
    CHECK(std::abs(next.x - 0.54156662464761552) < 1e-6);
    CHECK(std::abs(next.y - 0.48325815512805054) < 1e-6);
}

TEST_CASE("step output stays in [0,1) across random states and parameters") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::uint32_t> word(0, 0xffffffffu);

    for (int set = 0; set < 100; ++set) {
        MapParams params;
        params.alpha = word(rng);
        params.beta = word(rng);
        params.x_init = unit(rng) + 1e-12;
        params.y_init = unit(rng) + 1e-12;
        MapState state{params.x_init, params.y_init};
        for (int i = 0; i < 10000; ++i) {
            state = step(state, params);
            REQUIRE(state.x >= 0.0);
            REQUIRE(state.x < 1.0);
            REQUIRE(state.y >= 0.0);
            REQUIRE(state.y < 1.0);
        }
    }
}

TEST_CASE("two runs from identical inputs are bitwise identical") {
    const MapParams params{7, 13, 1e8, 0.25, 0.75};
    MapState a{params.x_init, params.y_init};
    MapState b = a;
    for (int i = 0; i < 1000; ++i) {
        a = step(a, params);
        b = step(b, params);
        REQUIRE(a.x == b.x);
        REQUIRE(a.y == b.y);
    }
}

TEST_CASE("analytic Jacobian matches central finite differences of the pre-mod map") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::uint32_t> small(0, 200);
    const double h = 1e-6;

    for (int trial = 0; trial < 100; ++trial) {
        MapParams params;
        params.alpha = small(rng);
        params.beta = small(rng);
        const MapState s{unit(rng), unit(rng)};

        const auto [fxp, fyp] = step_raw(MapState{s.x + h, s.y}, params);
        const auto [fxm, fym] = step_raw(MapState{s.x - h, s.y}, params);
        const auto [fxq, fyq] = step_raw(MapState{s.x, s.y + h}, params);
        const auto [fxr, fyr] = step_raw(MapState{s.x, s.y - h}, params);

        const Mat2 j = jacobian_raw(s, params);
        const double fd[4] = {(fxp - fxm) / (2 * h), (fxq - fxr) / (2 * h),
                              (fyp - fym) / (2 * h), (fyq - fyr) / (2 * h)};
        const double an[4] = {j.xx, j.xy, j.yx, j.yy};
        for (int k = 0; k < 4; ++k) {
            const double scale = std::max({std::abs(an[k]), std::abs(fd[k]), 1.0});
            REQUIRE(std::abs(an[k] - fd[k]) / scale < 1e-4);
        }
    }
}

TEST_CASE("Jacobian at the origin zeroes the radial gradient") {
    const MapParams params{1, 1, 1e8, 0.5, 0.5};
    const Mat2 j = jacobian_raw(MapState{0.0, 0.0}, params);
    CHECK(std::isfinite(j.xx));
    CHECK(j.xx == 0.0);  // 2x, the sine term and the radial term all vanish
    CHECK(j.xy == 0.0);
}

TEST_CASE("cross-coupling is present at a generic point") {
    const MapParams params{1, 1, 1e8, 0.5, 0.5};
    const Mat2 j = jacobian_raw(MapState{0.3, 0.7}, params);
    CHECK(std::abs(j.yx) > 1.0);  // dy_{n+1}/dx_n
}

TEST_CASE("generate_stream contract") {
    const MapParams params{1, 1, 1e8, 0.5, 0.5};

    SUBCASE("length 0 is empty") {
        CHECK(generate_stream(params, 0, 0).values.empty());
        CHECK(generate_stream(params, 50, 0).values.empty());
    }

    SUBCASE("interleaving is x1,y1,x2,y2 with (x1,y1) = step(init)") {
        const ChaoticStream stream = generate_stream(params, 0, 4);
        const MapState s1 = step(MapState{0.5, 0.5}, params);
        const MapState s2 = step(s1, params);
        REQUIRE(stream.values.size() == 4);
        CHECK(stream.values[0] == s1.x);
        CHECK(stream.values[1] == s1.y);
        CHECK(stream.values[2] == s2.x);
        CHECK(stream.values[3] == s2.y);
    }

    SUBCASE("odd length ends after an x value") {
        const ChaoticStream stream = generate_stream(params, 0, 3);
        const MapState s1 = step(MapState{0.5, 0.5}, params);
        const MapState s2 = step(s1, params);
        REQUIRE(stream.values.size() == 3);
        CHECK(stream.values[2] == s2.x);
    }

    SUBCASE("warmup discards iterations") {
        const ChaoticStream warmed = generate_stream(params, 3, 2);
        MapState s{0.5, 0.5};
        for (int i = 0; i < 4; ++i) s = step(s, params);
        CHECK(warmed.values[0] == s.x);
        CHECK(warmed.values[1] == s.y);
    }

    SUBCASE("every value is in [0,1) and reruns are identical") {
        const ChaoticStream a = generate_stream(params, 1000, 5000);
        const ChaoticStream b = generate_stream(params, 1000, 5000);
        REQUIRE(a.values.size() == 5000);
        for (std::size_t i = 0; i < a.values.size(); ++i) {
            REQUIRE(a.values[i] >= 0.0);
            REQUIRE(a.values[i] < 1.0);
            REQUIRE(a.values[i] == b.values[i]);
        }
    }
}

TEST_CASE("a 1e-9 initial perturbation separates the streams within 3 pairs") {
    MapParams a{1, 1, 1e8, 0.5, 0.5};
    MapParams b = a;
    b.x_init = 0.5 + 1e-9;
    const ChaoticStream sa = generate_stream(a, 0, 6);
    const ChaoticStream sb = generate_stream(b, 0, 6);

    std::size_t first_big = sa.values.size();
    for (std::size_t i = 0; i < sa.values.size(); ++i) {
        if (std::abs(sa.values[i] - sb.values[i]) > 0.1) {
            first_big = i;
            break;
        }
    }
    // Divergence lands on the second x iterate (stream index 2).
    CHECK(first_big == 2);
}

TEST_CASE("parameter validation") {
    MapParams params;
    params.x_init = 0.0;
    CHECK_THROWS_AS(generate_stream(params, 0, 1), std::invalid_argument);
    params.x_init = 0.5;
    params.bias = -1.0;
    CHECK_THROWS_AS(generate_stream(params, 0, 1), std::invalid_argument);
}
