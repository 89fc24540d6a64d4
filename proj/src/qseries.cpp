#include "rfrac/qseries.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rfrac/errors.hpp"

namespace rfrac {

namespace {

constexpr double kPoleTol = 1e-13;

// m with a q^m == 1, or -1. Only the part of the orbit with |a q^m| >= 1/2 can hit 1.
int terminating_index(cplx a, cplx q, int max_terms) {
    cplx x = a;
    for (int m = 0; m <= max_terms; ++m) {
        if (std::abs(1.0 - x) < 1e-12 * std::max(1.0, std::abs(x))) return m;
        if (std::abs(x) < 0.5 || q == 0.0) break;
        x *= q;
    }
    return -1;
}

int nonpositive_integer(cplx a) {
    double r = std::round(a.real());
    if (r <= 0 && std::abs(a - cplx(r, 0)) < 1e-14 * std::max(1.0, std::abs(r))) return static_cast<int>(-r);
    return -1;
}

int min_index(int acc, int m) {
    if (m < 0) return acc;
    return acc < 0 ? m : std::min(acc, m);
}

// t_0 = 1, t_{n+1} = t_n * ratio(n); value = sum weight(n) t_n.
// last >= 0 means the series stops after term `last`.
template <class Ratio, class Weight>
SeriesResult sum_series(Ratio ratio, Weight weight, int last, double eps, int max_terms) {
    SeriesResult out;
    cplx t = 1.0;
    cplx partial = 0.0;
    int hits = 0;
    for (int n = 0; n < max_terms; ++n) {
        cplx wt = weight(n) * t;
        partial += wt;
        if (!std::isfinite(std::abs(partial))) throw DivergenceError("series partial sum overflowed");
        if (n == last) {
            out.value = partial;
            out.terms_used = n + 1;
            out.converged = true;
            return out;
        }
        t *= ratio(n);
        cplx next = weight(n + 1) * t;
        double rho = std::abs(wt) > 0 ? std::abs(next) / std::abs(wt) : 0.0;
        double tail = std::abs(next) == 0.0 ? 0.0
                      : rho < 1.0           ? std::abs(next) / (1.0 - rho)
                                            : std::numeric_limits<double>::infinity();
        if (tail <= eps * std::max(1.0, std::abs(partial))) {
            if (++hits >= 2 || tail == 0.0) {
                out.value = partial;
                out.terms_used = n + 1;
                out.tail_bound = tail;
                out.converged = true;
                return out;
            }
        } else {
            hits = 0;
        }
    }
    throw DivergenceError("series did not converge within " + std::to_string(max_terms) + " terms");
}

cplx checked_denominator(cplx d, const char* what) {
    if (std::abs(d) < kPoleTol) throw PoleError(std::string("zero denominator factor in ") + what);
    return d;
}

} // namespace

QContext::QContext(cplx q, double eps_product, double eps_series, int max_terms)
    : q_(q), eps_product_(eps_product), eps_series_(eps_series), max_terms_(max_terms) {
    if (!(std::abs(q) < 1.0)) throw DomainError("QContext requires |q| < 1");
    if (!(eps_product > 0) || !(eps_series > 0)) throw DomainError("QContext tolerances must be positive");
    if (max_terms < 1) throw DomainError("QContext max_terms must be >= 1");
}

cplx shifted_factorial(cplx a, int n) {
    cplx p = 1.0;
    for (int j = 0; j < n; ++j) p *= a + static_cast<double>(j);
    return p;
}

cplx q_pochhammer(const QContext& ctx, cplx a, int n) {
    cplx p = 1.0;
    cplx x = a;
    for (int j = 0; j < n; ++j) {
        p *= 1.0 - x;
        x *= ctx.q();
    }
    return p;
}

cplx q_pochhammer(const QContext& ctx, cplx a, Infinity) {
    cplx p = 1.0;
    cplx x = a;
    // Factors approach 1 geometrically; the neglected tail is below eps_product/(1-|q|).
    for (int j = 0; j < 1'000'000; ++j) {
        if (std::abs(x) < ctx.eps_product()) return p;
        p *= 1.0 - x;
        x *= ctx.q();
    }
    throw ConvergenceError("infinite q-product did not settle");
}

cplx multi_q_pochhammer(const QContext& ctx, std::span<const cplx> as, int n) {
    cplx p = 1.0;
    for (cplx a : as) p *= q_pochhammer(ctx, a, n);
    return p;
}

cplx multi_q_pochhammer(const QContext& ctx, std::span<const cplx> as, Infinity) {
    cplx p = 1.0;
    for (cplx a : as) p *= q_pochhammer(ctx, a, inf);
    return p;
}

cplx multi_q_pochhammer(const QContext& ctx, std::initializer_list<cplx> as, int n) {
    return multi_q_pochhammer(ctx, std::span<const cplx>(as.begin(), as.size()), n);
}

cplx multi_q_pochhammer(const QContext& ctx, std::initializer_list<cplx> as, Infinity) {
    return multi_q_pochhammer(ctx, std::span<const cplx>(as.begin(), as.size()), inf);
}

SeriesResult hyper_2f1(cplx a, cplx b, cplx c, cplx z, double eps, int max_terms) {
    int last = min_index(nonpositive_integer(a), nonpositive_integer(b));
    if (last < 0 && !(std::abs(z) < 1.0))
        throw DomainError("2F1 series needs |z| < 1 unless it terminates");
    auto ratio = [&](int n) {
        double k = n;
        return (a + k) * (b + k) / (checked_denominator(c + k, "2F1") * (k + 1.0)) * z;
    };
    return sum_series(ratio, [](int) { return cplx(1.0); }, last, eps, max_terms);
}

SeriesResult basic_phi(const QContext& ctx, std::span<const cplx> upper, std::span<const cplx> lower,
                       cplx z) {
    const cplx q = ctx.q();
    int last = -1;
    for (cplx a : upper) last = min_index(last, terminating_index(a, q, ctx.max_terms()));
    const int extra = 1 + static_cast<int>(lower.size()) - static_cast<int>(upper.size());
    if (last < 0 && extra < 0 && z != 0.0)
        throw DomainError("basic series with more upper than lower+1 parameters diverges");
    cplx qn = 1.0;  // q^n, advanced inside ratio(n) which is called with n = 0, 1, ...
    auto ratio = [&](int) {
        cplx num = 1.0, den = 1.0 - q * qn;
        for (cplx a : upper) num *= 1.0 - a * qn;
        for (cplx b : lower) den *= checked_denominator(1.0 - b * qn, "basic series");
        checked_denominator(den, "basic series");
        cplx r = num / den * z;
        for (int i = 0; i < extra; ++i) r *= -qn;
        qn *= q;
        return r;
    };
    return sum_series(ratio, [](int) { return cplx(1.0); }, last, ctx.eps_series(), ctx.max_terms());
}

SeriesResult basic_phi(const QContext& ctx, std::initializer_list<cplx> upper,
                       std::initializer_list<cplx> lower, cplx z) {
    return basic_phi(ctx, std::span<const cplx>(upper.begin(), upper.size()),
                     std::span<const cplx>(lower.begin(), lower.size()), z);
}

SeriesResult w87(const QContext& ctx, cplx a, cplx b, cplx c, cplx d, cplx e, cplx f, cplx z) {
    const cplx q = ctx.q();
    const std::array<cplx, 6> up{a, b, c, d, e, f};
    const std::array<cplx, 6> lo{q, a * q / b, a * q / c, a * q / d, a * q / e, a * q / f};
    int last = -1;
    for (cplx x : up) last = min_index(last, terminating_index(x, q, ctx.max_terms()));
    const cplx one_minus_a = checked_denominator(1.0 - a, "8W7");
    cplx qn = 1.0;
    auto ratio = [&](int) {
        cplx num = 1.0, den = 1.0;
        for (cplx x : up) num *= 1.0 - x * qn;
        for (cplx x : lo) den *= checked_denominator(1.0 - x * qn, "8W7");
        qn *= q;
        return num / den * z;
    };
    // (1 - a q^{2n})/(1 - a) stands in for the +-sqrt(aq), +-sqrt(a) pairs.
    auto weight = [&](int n) { return (1.0 - a * std::pow(q, 2 * n)) / one_minus_a; };
    return sum_series(ratio, weight, last, ctx.eps_series(), ctx.max_terms());
}

cplx gamma_fn(cplx z) {
    int np = nonpositive_integer(z);
    if (np >= 0) throw PoleError("gamma has a pole at " + std::to_string(-np));
    constexpr double pi = std::numbers::pi;
    if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma_fn(1.0 - z));
    static constexpr std::array<double, 9> p{0.99999999999980993,  676.5203681218851,
                                              -1259.1392167224028,  771.32342877765313,
                                              -176.61502916214059,  12.507343278686905,
                                              -0.13857109526572012, 9.9843695780195716e-6,
                                              1.5056327351493116e-7};
    constexpr double g = 7.0;
    z -= 1.0;
    cplx x = p[0];
    for (int i = 1; i < 9; ++i) x += p[i] / (z + static_cast<double>(i));
    cplx t = z + g + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

cplx phi_value(const QContext& ctx, std::initializer_list<cplx> upper,
               std::initializer_list<cplx> lower, cplx z) {
    return basic_phi(ctx, upper, lower, z).value;
}

cplx f21_value(cplx a, cplx b, cplx c, cplx z) { return hyper_2f1(a, b, c, z).value; }

} // namespace rfrac
