#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <string>

#include "rfrac/errors.hpp"
#include "rfrac/models.hpp"
#include "rfrac/qseries.hpp"

namespace rfrac::detail {

inline constexpr double pi = std::numbers::pi;
inline const cplx I{0.0, 1.0};

inline cplx prod(const QContext& c, std::initializer_list<cplx> xs) {
    return multi_q_pochhammer(c, xs, inf);
}
inline cplx prod(const QContext& c, std::initializer_list<cplx> xs, int n) {
    return multi_q_pochhammer(c, xs, n);
}

inline void require(bool ok, const std::string& model, const std::string& condition) {
    if (!ok) throw DomainError(model + ": parameter domain violated, need " + condition);
}

// Integer power that also accepts negative exponents.
inline cplx ipow(cplx x, int n) {
    return n >= 0 ? std::pow(x, n) : 1.0 / std::pow(x, -n);
}

// 2F1 with the Pfaff map z -> z/(z-1) when that lands closer to the origin.
cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z);

// Branch rule of the Joukowski map: |u| >= 1, refusing the cut [-1, 1].
cplx joukowski_outer(cplx z);

// e^{i theta} for x = cos theta on [-1, 1]; for other x, the root e of e + 1/e = 2x with Im e >= 0 on the cut.
inline cplx unit_point(cplx x) {
    if (x.imag() == 0.0 && std::abs(x.real()) <= 1.0) return {x.real(), std::sqrt(1.0 - x.real() * x.real())};
    return x + I * std::sqrt(1.0 - x * x);
}

// Complete parameter map for `name` (defaults filled in, domain checked).
Params resolve(std::string_view name, const Params& p);

// Factories, one per model.
ModelPtr make_pastro(const Params& p);
ModelPtr make_chebyshev_r2(const Params& p);
ModelPtr make_cauchy(const Params& p);
ModelPtr make_unit_circle(const Params& p);
ModelPtr make_sinh_lattice(const Params& p);
ModelPtr make_cheby_rational(const Params& p);
ModelPtr make_rahman(const Params& p);

} // namespace rfrac::detail
