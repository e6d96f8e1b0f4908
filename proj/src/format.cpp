#include "format.hpp"

#include <cstdlib>

namespace periodica {

std::string to_decimal(const Real& x, long digits, bool truncate) {
    if (x.is_nan()) return "nan";
    if (!x.is_finite()) return x.sign() < 0 ? "-inf" : "inf";
    if (x.is_zero()) return "0";

    mpfr_exp_t e = 0;
    const size_t n = digits > 0 ? static_cast<size_t>(digits) : 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, n, x.raw(), truncate ? MPFR_RNDZ : MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);

    bool neg = false;
    if (!mant.empty() && mant[0] == '-') {
        neg = true;
        mant.erase(mant.begin());
    }
    // value = 0.mant * 10^e
    std::string out;
    const long len = static_cast<long>(mant.size());
    if (e > 0 && e <= len + 6 && e <= 1000000) {
        if (e >= len) {
            out = mant + std::string(static_cast<size_t>(e - len), '0');
        } else {
            out = mant.substr(0, static_cast<size_t>(e)) + "." + mant.substr(static_cast<size_t>(e));
        }
    } else if (e <= 0 && e > -6) {
        out = "0." + std::string(static_cast<size_t>(-e), '0') + mant;
    } else {
        // scientific: d.ddd e(exp-1)
        out = mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(e - 1);
    }
    // trim a trailing dot produced by e == len edge handling
    if (!out.empty() && out.back() == '.') out.pop_back();
    return neg ? "-" + out : out;
}

std::string complex_to_decimal(const Complex& z, long digits, bool truncate) {
    std::string re = to_decimal(z.re(), digits, truncate);
    std::string im = to_decimal(z.im(), digits, truncate);
    if (im == "0" || im == "-0") return re;
    if (!im.empty() && im[0] == '-') return re + " - " + im.substr(1) + "*i";
    return re + " + " + im + "*i";
}

} // namespace periodica
