// C ABI over the core library.  Exceptions are mapped to status codes with
// a thread-local message; all handles are heap-allocated core objects.

#include "periodica.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "accel.hpp"
#include "bench.hpp"
#include "closed_form.hpp"
#include "direct.hpp"
#include "errors.hpp"
#include "format.hpp"
#include "periodic_json.hpp"
#include "verify_suite.hpp"

using namespace periodica;

struct periodica_ctx {
    PrecisionContext ctx;
};

struct periodica_periodic {
    PeriodicFunction g;
};

struct periodica_result {
    Complex value;
    long terms = 0;
    std::string method;
    long digits = 0; // context's reliable digit count at creation time
    std::optional<Complex> oracle_value;
    std::optional<Real> oracle_bound;
    bool oracle_rigorous = false;
    std::optional<Real> difference;

    periodica_result() : value(64) {}
};

namespace {

thread_local std::string g_last_error;

periodica_status set_error(periodica_status st, const char* what) {
    g_last_error = what ? what : "unknown error";
    return st;
}

template <typename F>
periodica_status guarded(F&& fn) {
    try {
        fn();
        return PERIODICA_OK;
    } catch (const parity_error& e) {
        return set_error(PERIODICA_E_PARITY, e.what());
    } catch (const divergent_series_error& e) {
        return set_error(PERIODICA_E_DIVERGENT, e.what());
    } catch (const degenerate_parameters_error& e) {
        return set_error(PERIODICA_E_DEGENERATE, e.what());
    } catch (const parse_error& e) {
        return set_error(PERIODICA_E_PARSE, e.what());
    } catch (const invalid_argument_error& e) {
        return set_error(PERIODICA_E_INVALID, e.what());
    } catch (const std::bad_alloc&) {
        return set_error(PERIODICA_E_NOMEM, "out of memory");
    } catch (const std::exception& e) {
        return set_error(PERIODICA_E_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::operator new(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

periodica_status require(bool cond, const char* what) {
    return cond ? PERIODICA_OK : set_error(PERIODICA_E_INVALID, what);
}

} // namespace

extern "C" {

const char* periodica_version(void) { return "0.1.0"; }

const char* periodica_status_name(int status) {
    switch (status) {
        case PERIODICA_OK: return "ok";
        case PERIODICA_E_INVALID: return "invalid-argument";
        case PERIODICA_E_PARITY: return "parity-error";
        case PERIODICA_E_DIVERGENT: return "divergent-series";
        case PERIODICA_E_DEGENERATE: return "degenerate-parameters";
        case PERIODICA_E_PARSE: return "parse-error";
        case PERIODICA_E_NOMEM: return "out-of-memory";
        default: return "internal-error";
    }
}

const char* periodica_last_error(void) { return g_last_error.c_str(); }

periodica_ctx* periodica_ctx_new(long precision_bits, long guard_bits) {
    try {
        auto* c = new periodica_ctx{
            PrecisionContext(precision_bits, guard_bits == 0 ? 32 : guard_bits)};
        return c;
    } catch (const std::exception& e) {
        set_error(PERIODICA_E_INVALID, e.what());
        return nullptr;
    }
}

void periodica_ctx_free(periodica_ctx* ctx) { delete ctx; }

long periodica_ctx_precision(const periodica_ctx* ctx) { return ctx->ctx.precision_bits; }
long periodica_ctx_guard(const periodica_ctx* ctx) { return ctx->ctx.guard_bits; }
long periodica_ctx_digits(const periodica_ctx* ctx) { return ctx->ctx.reliable_digits(); }

periodica_status periodica_periodic_parse_json(const periodica_ctx* ctx,
                                               const char* json_text,
                                               periodica_periodic** out) {
    if (periodica_status st = require(ctx && json_text && out, "null argument")) return st;
    return guarded([&] {
        *out = new periodica_periodic{periodic_from_json(json_text, ctx->ctx)};
    });
}

periodica_status periodica_periodic_from_int_pairs(long period, const long* re,
                                                   const long* im,
                                                   periodica_periodic** out) {
    if (periodica_status st = require(period >= 1 && re && out, "null argument")) return st;
    return guarded([&] {
        std::vector<GaussianRational> vals;
        vals.reserve(static_cast<std::size_t>(period));
        for (long k = 0; k < period; ++k)
            vals.emplace_back(Rational(re[k]), Rational(im ? im[k] : 0));
        *out = new periodica_periodic{PeriodicFunction::from_exact(std::move(vals))};
    });
}

periodica_status periodica_periodic_constant_one(periodica_periodic** out) {
    if (periodica_status st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = new periodica_periodic{PeriodicFunction::constant_one()}; });
}

periodica_status periodica_periodic_mod4(periodica_periodic** out) {
    if (periodica_status st = require(out != nullptr, "null argument")) return st;
    return guarded(
        [&] { *out = new periodica_periodic{PeriodicFunction::mod4_character()}; });
}

void periodica_periodic_free(periodica_periodic* g) { delete g; }

long periodica_periodic_period(const periodica_periodic* g) {
    return static_cast<long>(g->g.period());
}

periodica_status periodica_eval_l(const periodica_ctx* ctx, const periodica_periodic* g,
                                  long s, const periodica_eval_opts* opts,
                                  periodica_result** out) {
    if (periodica_status st = require(ctx && g && out, "null argument")) return st;
    const std::string method = opts && opts->method ? opts->method : "accel";
    const long n_terms = opts ? opts->n_terms : 0;
    return guarded([&] {
        auto* res = new periodica_result;
        res->digits = ctx->ctx.reliable_digits();
        try {
            std::optional<Real> alpha;
            if (opts && opts->alpha)
                alpha = Real::parse(opts->alpha, ctx->ctx.work_bits());

            if (method == "direct") {
                Evaluation ev =
                    l_direct(s, g->g, n_terms > 0 ? n_terms : 100000, ctx->ctx);
                res->value = ev.value;
                res->terms = ev.terms_used;
                res->method = "direct";
                res->oracle_value = ev.value;
                res->oracle_bound = ev.error_bound;
                res->oracle_rigorous = ev.rigorous;
            } else if (method == "closed") {
                res->value = l_closed_complex(s, g->g, ctx->ctx);
                res->terms = 1;
                res->method = "closed";
            } else if (method == "accel" || method == "both") {
                EvaluateConfig cfg;
                cfg.alpha = alpha;
                if (method != "both") cfg.n_terms = n_terms;
                MethodReport rep = evaluate(s, g->g, cfg, ctx->ctx);
                res->value = rep.value;
                res->terms = rep.terms_used;
                res->method = rep.method;
                if (method == "both") {
                    Evaluation ev =
                        l_direct(s, g->g, n_terms > 0 ? n_terms : 100000, ctx->ctx);
                    res->oracle_value = ev.value;
                    res->oracle_bound = ev.error_bound;
                    res->oracle_rigorous = ev.rigorous;
                    res->difference = (rep.value - ev.value).abs();
                    res->method = "both";
                }
            } else {
                throw invalid_argument_error("unknown method '" + method +
                                             "' (use accel|direct|closed|both)");
            }
        } catch (...) {
            delete res;
            throw;
        }
        *out = res;
    });
}

periodica_status periodica_zeta_odd(const periodica_ctx* ctx, long s, const char* alpha,
                                    periodica_result** out) {
    if (periodica_status st = require(ctx && out, "null argument")) return st;
    return guarded([&] {
        if (s < 3 || s % 2 == 0)
            throw invalid_argument_error("zeta acceleration needs odd s >= 3");
        const long q = (s - 1) / 2;
        MethodReport rep;
        if (alpha) {
            rep = zeta_odd_ramanujan(
                q, AccelParams::make(Real::parse(alpha, ctx->ctx.work_bits()), q, ctx->ctx),
                ctx->ctx);
        } else {
            rep = zeta_odd_ramanujan(q, ctx->ctx);
        }
        auto* res = new periodica_result;
        res->digits = ctx->ctx.reliable_digits();
        res->value = rep.value;
        res->terms = rep.terms_used;
        res->method = rep.method;
        *out = res;
    });
}

periodica_status periodica_catalan(const periodica_ctx* ctx, periodica_result** out) {
    if (periodica_status st = require(ctx && out, "null argument")) return st;
    return guarded([&] {
        MethodReport rep = catalan(ctx->ctx);
        auto* res = new periodica_result;
        res->digits = ctx->ctx.reliable_digits();
        res->value = rep.value;
        res->terms = rep.terms_used;
        res->method = rep.method;
        *out = res;
    });
}

periodica_status periodica_lerch(const periodica_ctx* ctx, const char* kind, long q,
                                 const char* r, const char* alpha,
                                 periodica_result** out) {
    if (periodica_status st = require(ctx && kind && r && out, "null argument")) return st;
    return guarded([&] {
        Real rv = Real::parse(r, ctx->ctx.work_bits());
        MethodReport rep;
        const std::string k = kind;
        if (k == "cos") {
            rep = alpha ? lerch_cos(q, rv,
                                    AccelParams::make(
                                        Real::parse(alpha, ctx->ctx.work_bits()), q, ctx->ctx),
                                    ctx->ctx)
                        : lerch_cos(q, rv, ctx->ctx);
        } else if (k == "sin") {
            rep = alpha ? lerch_sin(q, rv,
                                    AccelParams::make(
                                        Real::parse(alpha, ctx->ctx.work_bits()), q, ctx->ctx),
                                    ctx->ctx)
                        : lerch_sin(q, rv, ctx->ctx);
        } else {
            throw invalid_argument_error("lerch kind must be cos or sin");
        }
        auto* res = new periodica_result;
        res->digits = ctx->ctx.reliable_digits();
        res->value = rep.value;
        res->terms = rep.terms_used;
        res->method = rep.method;
        *out = res;
    });
}

void periodica_result_free(periodica_result* r) { delete r; }

periodica_status periodica_result_value_str(const periodica_result* r, long digits,
                                            char** re, char** im) {
    if (periodica_status st = require(r && re, "null argument")) return st;
    return guarded([&] {
        *re = dup_string(to_decimal(r->value.re(), digits));
        if (im) *im = dup_string(to_decimal(r->value.im(), digits));
    });
}

long periodica_result_terms(const periodica_result* r) { return r->terms; }

const char* periodica_result_method(const periodica_result* r) {
    return r->method.c_str();
}

periodica_status periodica_result_error_bound_str(const periodica_result* r, char** bound,
                                                  int* rigorous) {
    if (periodica_status st = require(r && bound, "null argument")) return st;
    if (!r->oracle_bound)
        return set_error(PERIODICA_E_INVALID, "result carries no error bound");
    return guarded([&] {
        *bound = dup_string(to_decimal(*r->oracle_bound, 3, /*truncate=*/false));
        if (rigorous) *rigorous = r->oracle_rigorous ? 1 : 0;
    });
}

periodica_status periodica_result_oracle_value_str(const periodica_result* r, long digits,
                                                   char** re, char** im) {
    if (periodica_status st = require(r && re, "null argument")) return st;
    if (!r->oracle_value)
        return set_error(PERIODICA_E_INVALID, "result carries no oracle value");
    return guarded([&] {
        *re = dup_string(to_decimal(r->oracle_value->re(), digits));
        if (im) *im = dup_string(to_decimal(r->oracle_value->im(), digits));
    });
}

periodica_status periodica_result_difference_str(const periodica_result* r, char** diff) {
    if (periodica_status st = require(r && diff, "null argument")) return st;
    if (!r->difference)
        return set_error(PERIODICA_E_INVALID, "result carries no difference");
    return guarded(
        [&] { *diff = dup_string(to_decimal(*r->difference, 3, /*truncate=*/false)); });
}

void periodica_string_free(char* s) { ::operator delete(s); }

periodica_status periodica_verify(const periodica_ctx* ctx, const char* suite,
                                  unsigned trials, unsigned long long seed, char** report,
                                  unsigned* failures) {
    if (periodica_status st = require(ctx && suite && report, "null argument")) return st;
    return guarded([&] {
        VerifyOptions opts;
        opts.suite = suite;
        opts.trials = trials;
        opts.seed = seed;
        VerifyOutcome out = run_verify(opts, ctx->ctx);
        *report = dup_string(out.report);
        if (failures) *failures = out.failures;
    });
}

periodica_status periodica_bench(const periodica_ctx* ctx, const char* target,
                                 long direct_terms, char** csv) {
    if (periodica_status st = require(ctx && target && csv, "null argument")) return st;
    return guarded([&] {
        *csv = dup_string(
            bench_csv(target, ctx->ctx, direct_terms > 0 ? direct_terms : 10000));
    });
}

} // extern "C"
