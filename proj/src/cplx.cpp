#include "cplx.hpp"

namespace periodica {

Complex coth(const Complex& z) {
    // coth(x+iy) = (sinh x cosh x - i sin y cos y) / (sinh^2 x + sin^2 y)
    const mpfr_prec_t wp = std::max(z.re().prec(), z.im().prec());
    Real shx(wp), chx(wp);
    mpfr_sinh_cosh(shx.raw(), chx.raw(), z.re().raw(), MPFR_RNDN);
    Real sy(wp), cy(wp);
    sin_cos(sy, cy, z.im());
    Real den = shx * shx + sy * sy;
    return Complex((shx * chx) / den, -(sy * cy) / den);
}

} // namespace periodica
