// egan-verify: check the circumsphere/insphere inequality and its spherical
// counterpart on explicit or randomly generated simplices.
//
// Exit codes: 0 = all checks passed, 1 = a mathematical check failed
// (negative slack, certificate violation, broken convergence), 2 = bad
// usage or invalid input.  Reports go to stdout (or --out) as JSON; timing
// goes to stderr so repeated runs stay byte-identical.

#include "egan/errors.hpp"
#include "egan/generators.hpp"
#include "egan/io.hpp"
#include "egan/limit.hpp"
#include "egan/scan.hpp"
#include "egan/search.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace {

using egan::Json;

void emit(const Json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) std::cout << text;
    else egan::write_text_file(out_path, text);
}

Json envelope(const char* kind, bool ok) {
    Json j;
    j["kind"] = kind;
    j["ok"] = ok;
    return j;
}

struct CommonOpts {
    std::string input;
    std::string out;
    double rtol = egan::kDefaultRtol;
};

int run_verify(const CommonOpts& opt) {
    const auto loaded = egan::load_simplex_file(opt.input);
    Json j;
    bool ok = true;
    if (std::holds_alternative<egan::EuclideanSimplex>(loaded)) {
        const auto& s = std::get<egan::EuclideanSimplex>(loaded);
        const egan::EganReport rep = egan::egan_report(s);
        ok = rep.slack >= -opt.rtol * rep.R * rep.R;
        j = envelope("euclidean", ok);
        j["report"] = egan::to_json(rep);
    } else {
        const auto& s = std::get<egan::SphericalSimplex>(loaded);
        const egan::SphericalReport rep = egan::spherical_report(s, opt.rtol);
        ok = rep.slack >= -opt.rtol * std::max(1.0, rep.R * rep.R);
        j = envelope("spherical", ok);
        j["report"] = egan::to_json(rep);
    }
    emit(j, opt.out);
    return ok ? 0 : 1;
}

int run_certificate(const CommonOpts& opt, bool random, int dim, std::uint64_t seed) {
    std::optional<egan::SphericalSimplex> simplex;
    if (random) {
        egan::TrialConfig cfg;
        cfg.dim = dim;
        cfg.seed = seed;
        simplex = egan::gen_spherical(cfg, 0);
    } else {
        auto loaded = egan::load_simplex_file(opt.input);
        if (!std::holds_alternative<egan::SphericalSimplex>(loaded))
            throw egan::InvalidArgument("certificate requires a spherical simplex input");
        simplex = std::move(std::get<egan::SphericalSimplex>(loaded));
    }
    const egan::PolarPair pair = egan::make_polar_pair(*simplex);
    Json j;
    int code = 0;
    try {
        const egan::CertificateReport rep = egan::run_certificate(pair, opt.rtol);
        j = envelope("certificate", true);
        j["report"] = egan::to_json(rep);
    } catch (const egan::CertificateViolation& e) {
        j = envelope("certificate", false);
        j["error"] = e.what();
        code = 1;
    }
    j["input"] = egan::to_json(*simplex);
    emit(j, opt.out);
    return code;
}

int run_falsify(const egan::TrialConfig& cfg, const std::string& out) {
    const egan::ScanReport rep = egan::falsify_scan(cfg);
    std::cerr << "elapsed: " << rep.elapsed << "s\n";
    const bool ok = rep.violations == 0;
    Json j = envelope("falsify", ok);
    j["report"] = egan::to_json(rep);
    emit(j, out);
    return ok ? 0 : 1;
}

int run_extremal(const egan::TrialConfig& cfg, std::uint64_t iterations,
                 const std::string& csv, const std::string& out) {
    const auto start = std::chrono::steady_clock::now();
    const egan::SearchResult res = egan::extremal_search(cfg, iterations);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "elapsed: " << elapsed << "s\n";
    const bool ok = res.best_slack >= -cfg.rtol;
    Json j = envelope("extremal", ok);
    j["report"] = egan::to_json(res);
    emit(j, out);
    if (!csv.empty()) egan::write_text_file(csv, egan::trace_csv(res));
    return ok ? 0 : 1;
}

int run_converge(const CommonOpts& opt, std::vector<double> heights, const std::string& csv) {
    auto loaded = egan::load_simplex_file(opt.input);
    if (!std::holds_alternative<egan::EuclideanSimplex>(loaded))
        throw egan::InvalidArgument("converge requires a euclidean simplex input");
    const auto& s = std::get<egan::EuclideanSimplex>(loaded);
    if (heights.empty()) heights = egan::default_heights(egan::circumsphere(s).radius);
    Json j;
    int code = 0;
    try {
        const egan::ConvergenceTable table = egan::convergence_table(s, heights);
        j = envelope("converge", true);
        j["report"] = egan::to_json(table);
        if (!csv.empty()) egan::write_text_file(csv, egan::to_csv(table));
    } catch (const egan::ConvergenceFailure& e) {
        j = envelope("converge", false);
        j["error"] = e.what();
        code = 1;
    }
    emit(j, opt.out);
    return code;
}

int run_euler(const CommonOpts& opt) {
    const auto loaded = egan::load_simplex_file(opt.input);
    Json j;
    double residual = 0.0, tolerance = 0.0;
    if (std::holds_alternative<egan::EuclideanSimplex>(loaded)) {
        const auto& s = std::get<egan::EuclideanSimplex>(loaded);
        if (s.dim() != 2)
            throw egan::InvalidArgument("euler-residual needs a triangle (dim 2), got dim " +
                                        std::to_string(s.dim()));
        const egan::EganReport rep = egan::egan_report(s);
        residual = rep.slack; // (R - 2r) R - d^2 == R^2 - 2 R r - d^2
        tolerance = opt.rtol * rep.R * rep.R;
        j = envelope("euler-residual", std::abs(residual) <= tolerance);
        j["input_kind"] = "euclidean";
    } else {
        const auto& s = std::get<egan::SphericalSimplex>(loaded);
        residual = egan::spherical_euler_residual(s); // throws unless m == 3
        tolerance = opt.rtol;
        j = envelope("euler-residual", std::abs(residual) <= tolerance);
        j["input_kind"] = "spherical";
    }
    j["residual"] = residual;
    j["tolerance"] = tolerance;
    emit(j, opt.out);
    return j["ok"].get<bool>() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical checks for the simplex circumsphere/insphere inequality"};
    app.require_subcommand(1);

    CommonOpts verify_opt;
    CLI::App* verify = app.add_subcommand(
        "verify", "Evaluate the inequality report for one simplex file");
    verify->add_option("--input", verify_opt.input, "simplex JSON file")->required();
    verify->add_option("--rtol", verify_opt.rtol, "violation tolerance, relative");
    verify->add_option("--out", verify_opt.out, "write the JSON report here instead of stdout");

    CommonOpts cert_opt;
    bool cert_random = false;
    int cert_dim = 3;
    std::uint64_t cert_seed = 0;
    CLI::App* cert = app.add_subcommand(
        "certificate", "Run the matrix certificate on a spherical simplex");
    auto* cert_input = cert->add_option("--input", cert_opt.input, "spherical simplex JSON file");
    auto* cert_rand = cert->add_flag("--random", cert_random, "generate the simplex instead");
    cert->add_option("--dim", cert_dim, "ambient dimension m for --random");
    cert->add_option("--seed", cert_seed, "seed for --random");
    cert->add_option("--rtol", cert_opt.rtol, "residual tolerance, relative");
    cert->add_option("--out", cert_opt.out, "write the JSON report here instead of stdout");
    cert_input->excludes(cert_rand);
    cert_rand->excludes(cert_input);

    egan::TrialConfig falsify_cfg;
    falsify_cfg.trials = 1000;
    std::string falsify_out, falsify_gen = "gaussian";
    CLI::App* falsify = app.add_subcommand(
        "falsify", "Scan random simplices for counterexamples");
    falsify->add_option("--dim", falsify_cfg.dim, "euclidean dimension")->required();
    falsify->add_option("--trials", falsify_cfg.trials, "number of random simplices");
    falsify->add_option("--seed", falsify_cfg.seed, "stream seed");
    falsify->add_option("--generator", falsify_gen,
                        "gaussian | near-degenerate | regular-perturbed");
    falsify->add_option("--perturbation", falsify_cfg.perturbation,
                        "displacement for regular-perturbed");
    falsify->add_option("--rtol", falsify_cfg.rtol, "violation tolerance, relative");
    falsify->add_option("--out", falsify_out, "write the JSON report here instead of stdout");

    egan::TrialConfig extremal_cfg;
    std::uint64_t extremal_iters = 2000;
    std::string extremal_csv, extremal_out;
    CLI::App* extremal = app.add_subcommand(
        "extremal", "Minimize the normalized slack with a derivative-free search");
    extremal->add_option("--dim", extremal_cfg.dim, "euclidean dimension")->required();
    extremal->add_option("--seed", extremal_cfg.seed, "seed for the starting simplex");
    extremal->add_option("--iterations", extremal_iters, "iteration budget");
    extremal->add_option("--rtol", extremal_cfg.rtol, "violation tolerance");
    extremal->add_option("--csv", extremal_csv, "write the best-so-far trace as CSV");
    extremal->add_option("--out", extremal_out, "write the JSON report here instead of stdout");

    CommonOpts conv_opt;
    std::vector<double> conv_heights;
    std::string conv_csv;
    CLI::App* converge = app.add_subcommand(
        "converge", "Embed a euclidean simplex on growing spheres and tabulate the limit");
    converge->add_option("--input", conv_opt.input, "euclidean simplex JSON file")->required();
    converge->add_option("--heights", conv_heights, "comma-separated pole heights")
        ->delimiter(',');
    converge->add_option("--csv", conv_csv, "write the table as CSV");
    converge->add_option("--out", conv_opt.out, "write the JSON report here instead of stdout");

    CommonOpts euler_opt;
    CLI::App* euler = app.add_subcommand(
        "euler-residual", "Classical triangle identity residual (dim 2 / m = 3)");
    euler->add_option("--input", euler_opt.input, "simplex JSON file")->required();
    euler->add_option("--rtol", euler_opt.rtol, "identity tolerance");
    euler->add_option("--out", euler_opt.out, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(verify_opt);
        if (cert->parsed()) {
            if (!cert_random && cert_opt.input.empty())
                throw egan::InvalidArgument("certificate needs --input or --random");
            return run_certificate(cert_opt, cert_random, cert_dim, cert_seed);
        }
        if (falsify->parsed()) {
            falsify_cfg.generator = egan::parse_generator(falsify_gen);
            return run_falsify(falsify_cfg, falsify_out);
        }
        if (extremal->parsed()) return run_extremal(extremal_cfg, extremal_iters,
                                                    extremal_csv, extremal_out);
        if (converge->parsed()) return run_converge(conv_opt, conv_heights, conv_csv);
        if (euler->parsed()) return run_euler(euler_opt);
    } catch (const egan::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
