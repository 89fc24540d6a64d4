#include "rfrac/recurrence.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rfrac/errors.hpp"

namespace rfrac {

namespace {

cplx query(const Sequence& s, int n, int max_index, const char* name) {
    if (!s) throw CoefficientUnavailable(std::string("coefficient ") + name + " not provided");
    if (n < 1 || (max_index >= 0 && n > max_index))
        throw CoefficientUnavailable(std::string("coefficient ") + name + "_" + std::to_string(n) +
                                     " out of range");
    return s(n);
}

bool is_finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

} // namespace

RecurrenceSpec RecurrenceSpec::r1(Sequence c, Sequence lambda, Sequence a) {
    RecurrenceSpec s;
    s.kind = FractionKind::RI;
    s.c = std::move(c);
    s.lambda = std::move(lambda);
    s.a = std::move(a);
    return s;
}

RecurrenceSpec RecurrenceSpec::r2(Sequence c, Sequence lambda, Sequence a, Sequence b) {
    RecurrenceSpec s;
    s.kind = FractionKind::RII;
    s.c = std::move(c);
    s.lambda = std::move(lambda);
    s.a = std::move(a);
    s.b = std::move(b);
    return s;
}

cplx RecurrenceSpec::coef_c(int n) const { return query(c, n, max_index, "c"); }
cplx RecurrenceSpec::coef_lambda(int n) const { return query(lambda, n, max_index, "lambda"); }
cplx RecurrenceSpec::coef_a(int n) const { return query(a, n, max_index, "a"); }
cplx RecurrenceSpec::coef_b(int n) const {
    if (kind == FractionKind::RI) throw CoefficientUnavailable("R_I recurrence has no b_n");
    return query(b, n, max_index, "b");
}

cplx RecurrenceSpec::factor(int n, cplx z) const {
    cplx f = z - coef_a(n);
    if (kind == FractionKind::RII) f *= z - coef_b(n);
    return f;
}

cplx RecurrenceSpec::multiplier(int n, cplx z) const { return coef_lambda(n) * factor(n, z); }

PQPair forward(const RecurrenceSpec& spec, cplx z, int N) {
    if (N < 0) throw DomainError("forward needs N >= 0");
    PQPair pq;
    pq.z = z;
    pq.P.assign(static_cast<std::size_t>(N) + 2, 0.0);
    pq.Q.assign(static_cast<std::size_t>(N) + 1, 0.0);
    pq.P[1] = 1.0;
    if (N >= 1) {
        pq.P[2] = (z - spec.coef_c(1)) * pq.P[1] - spec.multiplier(1, z) * pq.P[0];
        pq.Q[1] = 1.0;
    }
    for (int n = 2; n <= N; ++n) {
        const auto k = static_cast<std::size_t>(n);
        const cplx zc = z - spec.coef_c(n);
        const cplx w = spec.multiplier(n, z);
        pq.P[k + 1] = zc * pq.P[k] - w * pq.P[k - 1];
        pq.Q[k] = zc * pq.Q[k - 1] - w * pq.Q[k - 2];
    }
    return pq;
}

std::vector<cplx> rationalize(const RecurrenceSpec& spec, const PQPair& pq) {
    const int N = pq.size();
    std::vector<cplx> out(static_cast<std::size_t>(N) + 1);
    cplx den = 1.0;
    for (int n = 0; n <= N; ++n) {
        if (n >= 1) {
            const cplx f = spec.factor(n + 1, pq.z);
            if (f == 0.0)
                throw CollisionError("z coincides with an interpolation point of index " +
                                     std::to_string(n + 1));
            den *= f;
        }
        out[static_cast<std::size_t>(n)] = pq.p(n) / den;
    }
    return out;
}

Convergents convergents(const RecurrenceSpec& spec, cplx z, int N) {
    Convergents out;
    out.values.reserve(static_cast<std::size_t>(std::max(N, 0)));
    // (p1, p0) = (P_n, P_{n-1}), same for q; rescaled jointly by powers of two.
    cplx p0 = 1.0, p1 = z - spec.coef_c(1);
    cplx q0 = 0.0, q1 = 1.0;
    auto record = [&](cplx p, cplx q) {
        if (p == 0.0) {
            out.values.push_back({std::numeric_limits<double>::quiet_NaN(), 0.0});
            out.zero_denominator.push_back(true);
        } else {
            out.values.push_back(q / p);
            out.zero_denominator.push_back(false);
        }
    };
    if (N >= 1) record(p1, q1);
    for (int n = 2; n <= N; ++n) {
        const cplx zc = z - spec.coef_c(n);
        const cplx w = spec.multiplier(n, z);
        const cplx p2 = zc * p1 - w * p0;
        const cplx q2 = zc * q1 - w * q0;
        p0 = p1, p1 = p2, q0 = q1, q1 = q2;
        const double big = std::max({std::abs(p1), std::abs(p0), std::abs(q1), std::abs(q0)});
        if (big > 0x1p500 || (big < 0x1p-500 && big > 0)) {
            const int e = -std::ilogb(big);
            p0 = std::ldexp(1.0, e) * p0, p1 = std::ldexp(1.0, e) * p1;
            q0 = std::ldexp(1.0, e) * q0, q1 = std::ldexp(1.0, e) * q1;
        }
        record(p1, q1);
    }
    return out;
}

cplx pincherle_ratio(const RecurrenceSpec& spec, cplx z, cplx x0, cplx x1) {
    const cplx den = spec.lambda1_limit ? (*spec.lambda1_limit)(z, x0, x1)
                                        : (z - spec.coef_c(1)) * x0 - x1;
    return x0 / den;
}

namespace {

// r_n = X_n / X_{n-1} for n = 1..window+1 obtained by the downward sweep from `start`.
struct Sweep {
    std::vector<cplx> r;  // r[n] for n = 1..window
    cplx ratio_at_0;
};

Sweep sweep(const RecurrenceSpec& spec, cplx z, int window, int start, const BackwardOptions& opt) {
    Sweep s;
    s.r.assign(static_cast<std::size_t>(window) + 1, 0.0);
    // r_{start+1}; then r_{n-1} = w_n / ((z - c_n) - r_n).
    cplx r = opt.seed_next / opt.seed_start;
    for (int n = start + 1; n >= 2; --n) {
        r = spec.multiplier(n, z) / ((z - spec.coef_c(n)) - r);
        if (n - 1 <= window) s.r[static_cast<std::size_t>(n - 1)] = r;
    }
    s.ratio_at_0 = pincherle_ratio(spec, z, 1.0, r);
    return s;
}

} // namespace

MinimalSolutionEstimate minimal_solution_backward(const RecurrenceSpec& spec, cplx z, int window,
                                                  int start, const BackwardOptions& opt) {
    if (window < 1) throw DomainError("backward recurrence window must be >= 1");
    if (start <= window) start = 2 * window + 2;
    if (opt.seed_start == 0.0) throw DomainError("backward seed X_start must be nonzero");
    Sweep prev = sweep(spec, z, window, start, opt);
    for (int s = 2 * start; s <= opt.max_start; s *= 2) {
        Sweep cur = sweep(spec, z, window, s, opt);
        const double scale = std::max(1.0, std::abs(cur.ratio_at_0));
        const bool ok_ratio = std::abs(cur.ratio_at_0 - prev.ratio_at_0) <= opt.tol * scale;
        const bool ok_tail =
            std::abs(cur.r.back() - prev.r.back()) <= opt.tol * std::max(1.0, std::abs(cur.r.back()));
        if (ok_ratio && ok_tail && is_finite(cur.ratio_at_0)) {
            MinimalSolutionEstimate est;
            est.start_used = s;
            est.ratio_at_0 = cur.ratio_at_0;
            est.values.assign(static_cast<std::size_t>(window) + 1, 1.0);
            for (int n = 1; n <= window; ++n)
                est.values[static_cast<std::size_t>(n)] =
                    est.values[static_cast<std::size_t>(n - 1)] * cur.r[static_cast<std::size_t>(n)];
            est.residual = recurrence_defect(spec, z, est.values, 0);
            est.valid = est.residual <= opt.residual_tol;
            return est;
        }
        prev = std::move(cur);
    }
    throw ConvergenceError("backward recurrence did not stabilise up to start " +
                           std::to_string(opt.max_start));
}

double pincherle_residual(const RecurrenceSpec& spec, cplx z, cplx cf_value,
                          const MinimalSolutionEstimate& est) {
    (void)spec;
    (void)z;
    return std::abs(cf_value - est.ratio_at_0);
}

double recurrence_defect(const RecurrenceSpec& spec, cplx z, const std::vector<cplx>& x, int first) {
    double worst = 0.0;
    for (std::size_t i = 2; i < x.size(); ++i) {
        const int n = first + static_cast<int>(i);
        const cplx t1 = (z - spec.coef_c(n)) * x[i - 1];
        const cplx t2 = spec.multiplier(n, z) * x[i - 2];
        const double scale = std::abs(x[i]) + std::abs(t1) + std::abs(t2);
        if (scale == 0.0) continue;
        worst = std::max(worst, std::abs(x[i] - t1 + t2) / scale);
    }
    return worst;
}

} // namespace rfrac
