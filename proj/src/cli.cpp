#include "rachaos/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

#include "rachaos/analysis.hpp"
#include "rachaos/chaos_metrics.hpp"
#include "rachaos/cipher.hpp"
#include "rachaos/emit.hpp"
#include "rachaos/io.hpp"
#include "rachaos/key_schedule.hpp"

namespace rachaos::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const fs::path& path, const std::string& text) {
    write_file(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

std::string read_text(const fs::path& path) {
    const auto bytes = read_file(path);
    return {bytes.begin(), bytes.end()};
}

SweepGrid parse_range(const std::string& text) {
    SweepGrid grid;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &grid.start, &grid.stop, &grid.step,
                    &tail) != 3)
        throw UsageError("--range must be start:stop:step");
    if (grid.step <= 0 || grid.stop < grid.start)
        throw UsageError("--range must satisfy start <= stop and step > 0");
    return grid;
}

struct Rect {
    std::size_t x = 0, y = 0, w = 0, h = 0;
};

Rect parse_rect(const std::string& text) {
    Rect r;
    char tail = 0;
    unsigned long long x, y, w, h;
    if (std::sscanf(text.c_str(), "%llu,%llu,%llu,%llu%c", &x, &y, &w, &h, &tail) != 4)
        throw UsageError("--rect must be x,y,w,h");
    r.x = x;
    r.y = y;
    r.w = w;
    r.h = h;
    return r;
}

void require_self_test() {
    if (!self_test())
        throw Error("cipher self-test failed: this build cannot round-trip losslessly");
}

struct AnalyzeOptions {
    std::string mode;
    std::uint32_t alpha = 1;
    std::uint32_t beta = 1;
    bool alpha_set = false;
    bool beta_set = false;
    std::string range;
    double x0 = 0.5;
    double y0 = 0.5;
    std::string out;
    std::size_t iterations = 10000;
    std::size_t length = 0;  // 0 = per-mode default
    std::size_t transient = 1000;
    std::uint64_t seed = 42;
    std::size_t points = 0;  // 0 = per-mode default
    double delta = 1e-9;
    double threshold = 0.1;
    std::size_t max_iter = 100;
    double epsilon = 1.0 / 12.0;
    std::size_t blocks = 3;
};

int do_analyze(const AnalyzeOptions& opt) {
    MapParams base;
    base.alpha = opt.alpha;
    base.beta = opt.beta;
    base.x_init = opt.x0;
    base.y_init = opt.y0;

    const bool is_sweep = opt.mode == "bifurcation" || opt.mode == "le" ||
                          opt.mode == "test01" || opt.mode == "cd" || opt.mode == "ke";

    std::string csv;
    if (is_sweep) {
        if (opt.range.empty()) throw UsageError("--range is required for " + opt.mode);
        if (opt.alpha_set && opt.beta_set)
            throw UsageError("fix only one of --alpha/--beta; the other is swept");
        // With --beta fixed the sweep runs over alpha, and vice versa.
        const SweptParam swept = opt.alpha_set ? SweptParam::beta : SweptParam::alpha;
        const MapFamily family = ra_family(base, swept);
        const SweepGrid grid = parse_range(opt.range);

        MetricConfig config;
        config.transient = opt.transient;
        config.rng_seed = opt.seed;
        config.epsilon = opt.epsilon;
        config.ke_block_max = opt.blocks;

        if (opt.mode == "bifurcation") {
            const std::size_t samples = opt.points == 0 ? 100 : opt.points;
            csv = emit_bifurcation_csv(bifurcation_sweep(family, grid, opt.transient, samples));
        } else if (opt.mode == "le") {
            config.n_iterations = opt.iterations;
            csv = emit_lyapunov_csv(lyapunov_sweep(family, grid, config));
        } else {
            SeriesMetric metric = SeriesMetric::zero_one;
            std::string column = "k";
            std::size_t default_length = 5000;
            if (opt.mode == "cd") {
                metric = SeriesMetric::correlation_dimension;
                column = "cd";
                default_length = 2000;
            } else if (opt.mode == "ke") {
                metric = SeriesMetric::kolmogorov_entropy;
                column = "ke";
            }
            config.n_iterations = opt.length == 0 ? default_length : opt.length;
            csv = emit_metric_csv(series_metric_sweep(family, grid, metric, config), column);
        }
    } else if (opt.mode == "attractor") {
        const std::size_t n = opt.points == 0 ? 10000 : opt.points;
        csv = emit_attractor_csv(attractor_points(base, n, opt.transient));
    } else {  // sensitivity
        csv = emit_sensitivity_csv(
            sensitivity_divergence(base, opt.delta, opt.threshold, opt.max_iter));
    }

    write_text(opt.out, csv);
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"RA-map hyper-chaotic image cipher and analysis toolkit"};
    app.require_subcommand(1);

    // encrypt
    std::string enc_in, enc_out, enc_key_out;
    bool enc_plain_init = false;
    CLI::App* enc = app.add_subcommand("encrypt", "Encrypt a grayscale image");
    enc->add_option("--in", enc_in, "input image (PGM, or PNG converted to gray)")->required();
    enc->add_option("--out", enc_out, "ciphertext PGM")->required();
    enc->add_option("--key-out", enc_key_out, "key file (64 hex chars)")->required();
    enc->add_flag("--no-chaotic-init", enc_plain_init,
                  "start diffusion counts at zero instead of chaotic values");

    // decrypt
    std::string dec_in, dec_key, dec_out;
    bool dec_plain_init = false;
    CLI::App* dec = app.add_subcommand("decrypt", "Decrypt a ciphertext PGM");
    dec->add_option("--in", dec_in, "ciphertext PGM")->required();
    dec->add_option("--key", dec_key, "key file written by encrypt")->required();
    dec->add_option("--out", dec_out, "recovered image PGM")->required();
    dec->add_flag("--no-chaotic-init", dec_plain_init,
                  "must match the flag used at encryption");

    // evaluate
    std::string eval_orig, eval_enc, eval_out, eval_scatter;
    std::size_t eval_scatter_pairs = 50000;
    CLI::App* eval = app.add_subcommand("evaluate", "Statistics of an original/encrypted pair");
    eval->add_option("--original", eval_orig, "original image")->required();
    eval->add_option("--encrypted", eval_enc, "encrypted image")->required();
    eval->add_option("--out", eval_out, "JSON report path")->required();
    eval->add_option("--scatter-out", eval_scatter,
                     "also write adjacent-pair CSVs <prefix>.{horizontal,vertical,diagonal}.csv");
    eval->add_option("--scatter-pairs", eval_scatter_pairs,
                     "max pairs per scatter CSV (default 50000)");

    // analyze-map
    AnalyzeOptions an;
    CLI::App* ana = app.add_subcommand("analyze-map", "Chaotic-map diagnostics as CSV");
    ana->add_option("mode", an.mode, "bifurcation|attractor|le|test01|cd|ke|sensitivity")
        ->required()
        ->check(CLI::IsMember(
            {"bifurcation", "attractor", "le", "test01", "cd", "ke", "sensitivity"}));
    auto* alpha_opt = ana->add_option("--alpha", an.alpha, "fixed alpha (default 1)");
    auto* beta_opt = ana->add_option("--beta", an.beta, "fixed beta (default 1)");
    ana->add_option("--range", an.range, "swept-parameter grid start:stop:step");
    ana->add_option("--x0", an.x0, "initial x in (0,1] (default 0.5)");
    ana->add_option("--y0", an.y0, "initial y in (0,1] (default 0.5)");
    ana->add_option("--out", an.out, "output CSV path")->required();
    ana->add_option("--iterations", an.iterations, "LE accumulation steps (default 10000)");
    ana->add_option("--length", an.length,
                    "series length for test01/cd/ke (defaults 5000/2000/5000)");
    ana->add_option("--transient", an.transient, "discarded iterations (default 1000)");
    ana->add_option("--seed", an.seed, "RNG seed for the 0-1 test phases (default 42)")
        ->envname("RACHAOS_SEED");
    ana->add_option("--points", an.points,
                    "samples per grid value (bifurcation, default 100) or attractor size "
                    "(default 10000)");
    ana->add_option("--delta", an.delta, "sensitivity: initial-x offset (default 1e-9)");
    ana->add_option("--threshold", an.threshold, "sensitivity: |x-x'| threshold (default 0.1)");
    ana->add_option("--max-iter", an.max_iter, "sensitivity: iterations to record (default 100)");
    ana->add_option("--epsilon", an.epsilon, "ke: box width (default 1/12)");
    ana->add_option("--blocks", an.blocks, "ke: longest block length (default 3)");

    // crop-test
    std::string crop_in, crop_key, crop_rect, crop_out;
    std::uint32_t crop_fill = 0;
    CLI::App* crop = app.add_subcommand(
        "crop-test", "Zero a ciphertext region, then decrypt (damage propagation demo)");
    crop->add_option("--in", crop_in, "ciphertext PGM")->required();
    crop->add_option("--key", crop_key, "key file")->required();
    crop->add_option("--rect", crop_rect, "damaged rectangle x,y,w,h")->required();
    crop->add_option("--fill", crop_fill, "fill gray value (default 0)")
        ->check(CLI::Range(0, 255));
    crop->add_option("--out", crop_out, "decrypted image PGM")->required();

    // gen-checkerboard
    std::size_t cb_size = 32;
    std::uint32_t cb_low = 0, cb_high = 255;
    std::string cb_out;
    CLI::App* cb = app.add_subcommand("gen-checkerboard",
                                      "Generate the adversarial checkerboard test image");
    cb->add_option("--size", cb_size, "side length (default 32)");
    cb->add_option("--low", cb_low, "gray value on even cells (default 0)")
        ->check(CLI::Range(0, 255));
    cb->add_option("--high", cb_high, "gray value on odd cells (default 255)")
        ->check(CLI::Range(0, 255));
    cb->add_option("--out", cb_out, "output PGM")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    an.alpha_set = alpha_opt->count() > 0;
    an.beta_set = beta_opt->count() > 0;

    try {
        if (*enc) {
            require_self_test();
            const GrayImage image = load_image(enc_in);
            const CipherOutput result = encrypt(image, CipherOptions{!enc_plain_init, 1000});
            save_pgm(enc_out, result.ciphertext);
            write_text(enc_key_out, format_key(result.key));
            return 0;
        }
        if (*dec) {
            require_self_test();
            const GrayImage cipher_img = load_image(dec_in);
            const KeyMaterial key = parse_key(read_text(dec_key));
            const DecryptResult result =
                decrypt(cipher_img, key, CipherOptions{!dec_plain_init, 1000});
            save_pgm(dec_out, result.image);
            if (!result.hash_ok) {
                std::fprintf(stderr,
                             "warning: recovered image does not match the key digest\n");
                return 3;
            }
            return 0;
        }
        if (*eval) {
            const GrayImage original = load_image(eval_orig);
            const GrayImage encrypted = load_image(eval_enc);
            write_text(eval_out, emit_report_json(evaluate(original, encrypted)));
            if (!eval_scatter.empty()) {
                for (const auto& [direction, tag] : {std::pair{Direction::horizontal, "horizontal"},
                                                     std::pair{Direction::vertical, "vertical"},
                                                     std::pair{Direction::diagonal, "diagonal"}}) {
                    write_text(eval_scatter + "." + tag + ".csv",
                               emit_scatter_csv(
                                   adjacent_scatter(encrypted, direction, eval_scatter_pairs)));
                }
            }
            return 0;
        }
        if (*ana) return do_analyze(an);
        if (*crop) {
            require_self_test();
            const GrayImage cipher_img = load_image(crop_in);
            const KeyMaterial key = parse_key(read_text(crop_key));
            const Rect r = parse_rect(crop_rect);
            const GrayImage damaged =
                crop_cipher(cipher_img, r.x, r.y, r.w, r.h, std::uint8_t(crop_fill));
            const DecryptResult result = decrypt(damaged, key);
            save_pgm(crop_out, result.image);
            if (!result.hash_ok)
                std::fprintf(stderr,
                             "note: hash mismatch, as expected for a damaged ciphertext\n");
            return 0;
        }
        if (*cb) {
            save_pgm(cb_out, gen_checkerboard(cb_size, cb_size, std::uint8_t(cb_low),
                                              std::uint8_t(cb_high)));
            return 0;
        }
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("rachaos");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace rachaos::cli
