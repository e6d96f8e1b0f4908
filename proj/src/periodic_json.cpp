#include "periodic_json.hpp"

#include <json.hpp>

#include "errors.hpp"
#include "format.hpp"

namespace periodica {

namespace {

using nlohmann::json;

bool all_integers(const json& values) {
    for (const auto& pair : values)
        for (const auto& part : pair)
            if (!part.is_number_integer()) return false;
    return true;
}

} // namespace

PeriodicFunction periodic_from_json(const std::string& text, const PrecisionContext& ctx) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("period") || !j.contains("values"))
        throw parse_error("expected {\"period\": m, \"values\": [[re, im], ...]}");
    if (!j["period"].is_number_integer() || j["period"].get<long>() < 1)
        throw parse_error("\"period\" must be a positive integer");
    const long m = j["period"].get<long>();
    const json& values = j["values"];
    if (!values.is_array() || static_cast<long>(values.size()) != m)
        throw parse_error("\"values\" must be an array of length \"period\"");
    for (const auto& pair : values) {
        if (!pair.is_array() || pair.size() != 2)
            throw parse_error("each value must be a [re, im] pair");
        for (const auto& part : pair)
            if (!part.is_number_integer() && !part.is_string())
                throw parse_error(
                    "re/im must be integers or decimal strings (floats are ambiguous; quote them)");
    }

    if (all_integers(values)) {
        std::vector<GaussianRational> vals;
        vals.reserve(static_cast<std::size_t>(m));
        for (const auto& pair : values)
            vals.emplace_back(Rational(pair[0].get<long>()), Rational(pair[1].get<long>()));
        return PeriodicFunction::from_exact(std::move(vals));
    }

    const mpfr_prec_t wp = ctx.work_bits();
    auto parse_part = [&](const json& part) {
        if (part.is_number_integer()) return Real::of(part.get<long>(), wp);
        return Real::parse(part.get<std::string>(), wp);
    };
    std::vector<Complex> vals;
    vals.reserve(static_cast<std::size_t>(m));
    for (const auto& pair : values)
        vals.emplace_back(parse_part(pair[0]), parse_part(pair[1]));
    return PeriodicFunction::from_values(std::move(vals));
}

std::string periodic_to_json(const PeriodicFunction& g, const PrecisionContext& ctx,
                             long digits) {
    json j;
    j["period"] = g.period();
    json values = json::array();
    for (long k = 0; k < static_cast<long>(g.period()); ++k) {
        Complex v = g.value(k, ctx);
        values.push_back({to_decimal(v.re(), digits), to_decimal(v.im(), digits)});
    }
    j["values"] = values;
    return j.dump();
}

} // namespace periodica
