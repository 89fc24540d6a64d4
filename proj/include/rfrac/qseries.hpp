#pragma once

#include <complex>
#include <span>
#include <vector>

namespace rfrac {

using cplx = std::complex<double>;

// Tag for the n = infinity overloads of the q-shifted factorials.
struct Infinity {};
inline constexpr Infinity inf{};

// Base q plus truncation knobs for infinite products and series.
class QContext {
public:
    explicit QContext(cplx q, double eps_product = 1e-16, double eps_series = 1e-16,
                      int max_terms = 5000);

    cplx q() const { return q_; }
    double eps_product() const { return eps_product_; }
    double eps_series() const { return eps_series_; }
    int max_terms() const { return max_terms_; }

private:
    cplx q_;
    double eps_product_;
    double eps_series_;
    int max_terms_;
};

struct SeriesResult {
    cplx value{};
    int terms_used = 0;
    double tail_bound = 0.0;
    bool converged = false;
};

// (a)_n, the rising factorial.
cplx shifted_factorial(cplx a, int n);

// (a;q)_n and (a;q)_inf.
cplx q_pochhammer(const QContext& ctx, cplx a, int n);
cplx q_pochhammer(const QContext& ctx, cplx a, Infinity);

// (a_1, ..., a_k; q)_n.
cplx multi_q_pochhammer(const QContext& ctx, std::span<const cplx> as, int n);
cplx multi_q_pochhammer(const QContext& ctx, std::span<const cplx> as, Infinity);
cplx multi_q_pochhammer(const QContext& ctx, std::initializer_list<cplx> as, int n);
cplx multi_q_pochhammer(const QContext& ctx, std::initializer_list<cplx> as, Infinity);

// Gauss series 2F1(a, b; c; z). Only |z| < 1 or terminating input is summed.
SeriesResult hyper_2f1(cplx a, cplx b, cplx c, cplx z, double eps = 1e-16, int max_terms = 5000);

// r phi s (upper; lower; q, z) including the [(-1)^n q^{n(n-1)/2}]^{1+s-r} factor.
SeriesResult basic_phi(const QContext& ctx, std::span<const cplx> upper, std::span<const cplx> lower,
                       cplx z);
SeriesResult basic_phi(const QContext& ctx, std::initializer_list<cplx> upper,
                       std::initializer_list<cplx> lower, cplx z);

// Very-well-poised 8W7(a; b, c, d, e, f; q, z).
SeriesResult w87(const QContext& ctx, cplx a, cplx b, cplx c, cplx d, cplx e, cplx f, cplx z);

// Euler gamma, Lanczos with reflection.
cplx gamma_fn(cplx z);

// Shorthands that throw unless the series converged.
cplx phi_value(const QContext& ctx, std::initializer_list<cplx> upper,
               std::initializer_list<cplx> lower, cplx z);
cplx f21_value(cplx a, cplx b, cplx c, cplx z);

} // namespace rfrac
