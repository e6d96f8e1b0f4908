// periodica command-line interface.  Talks to the shared library strictly
// through the C API in periodica.h.
//
// Exit codes: 0 success, 1 usage error, 2 domain/parse error,
//             3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "periodica.h"

namespace {

struct CtxDeleter {
    void operator()(periodica_ctx* c) const { periodica_ctx_free(c); }
};
struct PeriodicDeleter {
    void operator()(periodica_periodic* g) const { periodica_periodic_free(g); }
};
struct ResultDeleter {
    void operator()(periodica_result* r) const { periodica_result_free(r); }
};
using CtxPtr = std::unique_ptr<periodica_ctx, CtxDeleter>;
using PeriodicPtr = std::unique_ptr<periodica_periodic, PeriodicDeleter>;
using ResultPtr = std::unique_ptr<periodica_result, ResultDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    periodica_string_free(s);
    return out;
}

int fail_domain(periodica_status st) {
    std::cerr << "error (" << periodica_status_name(st) << "): " << periodica_last_error()
              << "\n";
    return 2;
}

struct OutputOptions {
    std::string format = "plain";
    long digits = 0;
};

int print_result(const periodica_result* res, const OutputOptions& out, long digits) {
    char *re = nullptr, *im = nullptr;
    if (periodica_status st = periodica_result_value_str(res, digits, &re, &im))
        return fail_domain(st);
    std::string re_s = take_string(re), im_s = take_string(im);
    const std::string method = periodica_result_method(res);
    const long terms = periodica_result_terms(res);

    const bool has_oracle = method == "both" || method == "direct";
    std::string oracle_re, oracle_im, bound, diff;
    int rigorous = 0;
    if (has_oracle) {
        char *b = nullptr, *ore = nullptr, *oim = nullptr;
        if (periodica_result_error_bound_str(res, &b, &rigorous) == PERIODICA_OK)
            bound = take_string(b);
        if (periodica_result_oracle_value_str(res, digits, &ore, &oim) == PERIODICA_OK) {
            oracle_re = take_string(ore);
            oracle_im = take_string(oim);
        }
        if (method == "both") {
            char* d = nullptr;
            if (periodica_result_difference_str(res, &d) == PERIODICA_OK)
                diff = take_string(d);
        }
    }

    if (out.format == "json") {
        nlohmann::json j;
        j["value"] = {{"re", re_s}, {"im", im_s}};
        j["digits"] = digits;
        j["method"] = method;
        j["terms_used"] = terms;
        if (!bound.empty()) {
            j["oracle"] = {{"re", oracle_re},
                           {"im", oracle_im},
                           {"error_bound", bound},
                           {"rigorous", rigorous != 0}};
        }
        if (!diff.empty()) j["difference"] = diff;
        std::cout << j.dump() << "\n";
    } else if (out.format == "csv") {
        std::cout << "method,re,im,terms_used\n";
        std::cout << method << "," << re_s << "," << im_s << "," << terms << "\n";
        if (!oracle_re.empty() && method == "both")
            std::cout << "direct," << oracle_re << "," << oracle_im << "," << "-\n";
    } else {
        if (im_s == "0")
            std::cout << re_s << "\n";
        else
            std::cout << re_s << " + " << im_s << "*i\n";
        if (method == "both") {
            std::cout << "oracle: " << oracle_re;
            if (oracle_im != "0") std::cout << " + " << oracle_im << "*i";
            std::cout << "  (tail bound " << bound << (rigorous ? ", rigorous" : ", heuristic")
                      << ")\n";
            std::cout << "difference: " << diff << "\n";
        } else if (method == "direct") {
            std::cout << "tail bound: " << bound << (rigorous ? " (rigorous)" : " (heuristic)")
                      << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arbitrary-precision Dirichlet series with periodic coefficients"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    long prec = 256;
    long guard = 32;
    OutputOptions out;
    app.add_option("--prec", prec, "working precision in bits (>= 64)")
        ->capture_default_str();
    app.add_option("--guard", guard, "guard bits (>= 16)")->capture_default_str();
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();

    // zeta
    auto* cmd_zeta = app.add_subcommand("zeta", "zeta(s) for odd s >= 3");
    long zeta_s = 3;
    std::string zeta_alpha;
    cmd_zeta->add_option("s", zeta_s, "odd integer >= 3")->required();
    cmd_zeta->add_option("--alpha", zeta_alpha, "free parameter alpha (beta = pi^2/alpha)");

    // lseries
    auto* cmd_lseries = app.add_subcommand("lseries", "L(s,g) for a periodic g from JSON");
    std::string g_file;
    long lseries_s = 2;
    std::string method = "accel", ls_alpha;
    long n_terms = 0;
    cmd_lseries->add_option("--g,--input", g_file, "path to the periodic-function JSON")
        ->required();
    cmd_lseries->add_option("-s,--s", lseries_s, "integer argument s >= 1")->required();
    cmd_lseries->add_option("--method", method, "evaluation method")
        ->check(CLI::IsMember({"accel", "direct", "closed", "both"}))
        ->capture_default_str();
    cmd_lseries->add_option("--alpha", ls_alpha, "free parameter alpha");
    cmd_lseries->add_option("--terms", n_terms, "term count for the direct method");

    // catalan
    auto* cmd_catalan = app.add_subcommand("catalan", "Catalan's constant");

    // lerch
    auto* cmd_lerch = app.add_subcommand("lerch", "cos/sin Lerch-type sums");
    std::string lerch_kind = "cos", lerch_r = "0.5", lerch_alpha;
    long lerch_q = 1;
    cmd_lerch->add_option("--kind", lerch_kind, "cos or sin")
        ->check(CLI::IsMember({"cos", "sin"}))
        ->required();
    cmd_lerch->add_option("-q,--q", lerch_q, "q (cos: >= 0, sin: >= 1)")->required();
    cmd_lerch->add_option("-r,--r", lerch_r, "r in (0,1), decimal")->required();
    cmd_lerch->add_option("--alpha", lerch_alpha, "free parameter alpha");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the identity suites");
    std::string suite = "all";
    unsigned trials = 50;
    unsigned long long seed = 1;
    cmd_verify->add_option("--suite", suite, "lemmas|theorems|all")->capture_default_str();
    cmd_verify->add_option("--trials", trials, "cases per family")->capture_default_str();
    cmd_verify->add_option("--seed", seed, "RNG seed")->capture_default_str();

    // bench
    auto* cmd_bench = app.add_subcommand("bench", "convergence benchmark CSV");
    std::string target = "zeta3", emit = "csv";
    long bench_terms = 10000;
    cmd_bench->add_option("--target", target, "zeta3|zeta5|catalan")->capture_default_str();
    cmd_bench->add_option("--emit", emit, "output kind (csv)")
        ->check(CLI::IsMember({"csv"}))
        ->capture_default_str();
    cmd_bench->add_option("--terms", bench_terms, "direct-summation terms")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    CtxPtr ctx(periodica_ctx_new(prec, guard));
    if (!ctx) {
        std::cerr << "error: " << periodica_last_error() << "\n";
        return 1;
    }
    const long digits = periodica_ctx_digits(ctx.get());

    if (cmd_zeta->parsed()) {
        if (zeta_s < 3 || zeta_s % 2 == 0) {
            std::cerr << "usage error: zeta needs an odd integer s >= 3\n";
            return 1;
        }
        periodica_result* raw = nullptr;
        if (periodica_status st = periodica_zeta_odd(
                ctx.get(), zeta_s, zeta_alpha.empty() ? nullptr : zeta_alpha.c_str(), &raw))
            return fail_domain(st);
        ResultPtr res(raw);
        return print_result(res.get(), out, digits);
    }

    if (cmd_lseries->parsed()) {
        std::ifstream in(g_file);
        if (!in) {
            std::cerr << "error: cannot read '" << g_file << "'\n";
            return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        periodica_periodic* graw = nullptr;
        if (periodica_status st =
                periodica_periodic_parse_json(ctx.get(), buf.str().c_str(), &graw))
            return fail_domain(st);
        PeriodicPtr g(graw);
        periodica_eval_opts opts{};
        opts.method = method.c_str();
        opts.alpha = ls_alpha.empty() ? nullptr : ls_alpha.c_str();
        opts.n_terms = n_terms;
        periodica_result* raw = nullptr;
        if (periodica_status st = periodica_eval_l(ctx.get(), g.get(), lseries_s, &opts, &raw))
            return fail_domain(st);
        ResultPtr res(raw);
        return print_result(res.get(), out, digits);
    }

    if (cmd_catalan->parsed()) {
        periodica_result* raw = nullptr;
        if (periodica_status st = periodica_catalan(ctx.get(), &raw)) return fail_domain(st);
        ResultPtr res(raw);
        return print_result(res.get(), out, digits);
    }

    if (cmd_lerch->parsed()) {
        periodica_result* raw = nullptr;
        if (periodica_status st = periodica_lerch(
                ctx.get(), lerch_kind.c_str(), lerch_q, lerch_r.c_str(),
                lerch_alpha.empty() ? nullptr : lerch_alpha.c_str(), &raw))
            return fail_domain(st);
        ResultPtr res(raw);
        return print_result(res.get(), out, digits);
    }

    if (cmd_verify->parsed()) {
        char* report = nullptr;
        unsigned failures = 0;
        if (periodica_status st =
                periodica_verify(ctx.get(), suite.c_str(), trials, seed, &report, &failures))
            return fail_domain(st);
        std::cout << take_string(report);
        if (failures > 0) {
            std::cerr << failures << " case(s) FAILED\n";
            return 3;
        }
        return 0;
    }

    if (cmd_bench->parsed()) {
        char* csv = nullptr;
        if (periodica_status st =
                periodica_bench(ctx.get(), target.c_str(), bench_terms, &csv))
            return fail_domain(st);
        std::cout << take_string(csv);
        return 0;
    }

    return 1;
}
