#include "bench.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "accel.hpp"
#include "direct.hpp"
#include "errors.hpp"

namespace periodica {

namespace {

void append_row(std::string& csv, const char* method, long index, double term_abs,
                double err) {
    char line[128];
    std::snprintf(line, sizeof(line), "%s,%ld,%.6e,%.6e\n", method, index, term_abs, err);
    csv += line;
}

// log-spaced index set 1..n_max including every index <= 100 and n_max itself
std::vector<long> direct_indices(long n_max) {
    std::vector<long> idx;
    long step = 1;
    for (long n = 1; n <= n_max; n += step) {
        idx.push_back(n);
        if (n >= 1000) step = 1000;
        else if (n >= 100) step = 100;
    }
    if (idx.back() != n_max) idx.push_back(n_max);
    return idx;
}

} // namespace

std::string bench_csv(const std::string& target, const PrecisionContext& ctx,
                      long direct_terms) {
    const mpfr_prec_t wp = ctx.work_bits();
    PrecisionContext ref_ctx(2 * ctx.precision_bits, ctx.guard_bits);

    long s;                       // Dirichlet argument for the direct route
    PeriodicFunction g = PeriodicFunction::constant_one();
    std::function<MethodReport(long, const PrecisionContext&)> accel_eval;
    Real reference(ref_ctx.work_bits());

    if (target == "zeta3" || target == "zeta5") {
        const long q = target == "zeta3" ? 1 : 2;
        s = 2 * q + 1;
        // alpha = beta = pi for zeta3 (the classical reduction); pi/2 for zeta5
        auto params_for = [q](const PrecisionContext& c) {
            Real pi = pi_value(c);
            return AccelParams::make(q == 1 ? pi : ldexp(pi, -1), q, c);
        };
        accel_eval = [q, params_for](long n_terms, const PrecisionContext& c) {
            AccelParams p = params_for(c);
            p.n_terms = n_terms;
            return zeta_odd_ramanujan(q, p, c);
        };
        reference = zeta_odd_ramanujan(q, params_for(ref_ctx), ref_ctx).value.re();
    } else if (target == "catalan") {
        s = 2;
        g = PeriodicFunction::mod4_character();
        accel_eval = [](long n_terms, const PrecisionContext& c) {
            AccelParams p = AccelParams::make(ldexp(pi_value(c), -1), 1, c, n_terms);
            return l4_accel(1, p, c);
        };
        reference = l4_accel(1, AccelParams::make(ldexp(pi_value(ref_ctx), -1), 1, ref_ctx),
                             ref_ctx)
                        .value.re();
    } else {
        throw invalid_argument_error("unknown bench target '" + target +
                                     "' (use zeta3|zeta5|catalan)");
    }

    std::string csv = "method,term_index,term_abs,abs_error\n";

    // accelerated route: re-solve with forced truncation T = 1..T_auto
    MethodReport auto_run = accel_eval(0, ctx);
    long t_auto = auto_run.terms_used;
    long per_series = 0;
    {
        // terms_used counts all series; recover a per-series cap
        MethodReport one_term = accel_eval(1, ctx);
        per_series = one_term.terms_used; // number of series in the formula
        t_auto = (t_auto + per_series - 1) / per_series;
    }
    Real ref_round(wp);
    ref_round.set(reference);
    for (long T = 1; T <= t_auto + 2; ++T) {
        MethodReport r = accel_eval(T, ctx);
        double err = abs(r.value.re() - ref_round).to_double();
        // |T-th term| of the slowest exponential series, e^{-2 pi T} scale:
        double term_abs;
        if (target == "catalan") {
            double x = 3.14159265358979 * (2.0 * T - 1.0);
            term_abs = std::exp(-x) / ((2.0 * T - 1.0) * (2.0 * T - 1.0));
        } else {
            double rate = target == "zeta3" ? 2.0 * 3.14159265358979 : 3.14159265358979;
            term_abs = std::exp(-rate * T) / std::pow(static_cast<double>(T),
                                                      static_cast<double>(s));
        }
        append_row(csv, "accel", r.terms_used, term_abs, err);
        if (err == 0.0) break;
    }

    // direct route: partial-sum error at log-spaced indices
    for (long n : direct_indices(direct_terms)) {
        Evaluation ev = l_direct(s, g, n, ctx);
        double err = abs(ev.value.re() - ref_round).to_double();
        double term_abs = std::pow(static_cast<double>(n), -static_cast<double>(s));
        append_row(csv, "direct", ev.terms_used, term_abs, err);
    }
    return csv;
}

} // namespace periodica
