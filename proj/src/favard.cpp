#include "rfrac/favard.hpp"

#include <cmath>
#include <string>

#include "rfrac/errors.hpp"

namespace rfrac {

namespace {

using lcplx = std::complex<long double>;
using Poly = std::vector<lcplx>;  // ascending coefficients

lcplx widen(cplx v) { return {v.real(), v.imag()}; }
cplx narrow(lcplx v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

lcplx eval(const Poly& p, lcplx x) {
    lcplx s = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * x + *it;
    return s;
}

lcplx eval_derivative(const Poly& p, lcplx x) {
    lcplx s = 0;
    for (std::size_t i = p.size(); i-- > 1;) s = s * x + static_cast<long double>(i) * p[i];
    return s;
}

Poly mul_linear(const Poly& p, lcplx root) {  // p * (x - root)
    Poly out(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] -= root * p[i];
    }
    return out;
}

Poly div_linear(const Poly& p, lcplx root) {  // exact quotient by (x - root), remainder dropped
    if (p.size() <= 1) return Poly{0};
    Poly out(p.size() - 1, 0);
    lcplx carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * root;
        out[i - 1] = carry;
    }
    return out;
}

Poly shift(const Poly& p, int k) {  // x^k p
    Poly out(static_cast<std::size_t>(k), 0);
    out.insert(out.end(), p.begin(), p.end());
    return out;
}

void axpy(Poly& y, lcplx a, const Poly& x) {
    if (y.size() < x.size()) y.resize(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) y[i] -= a * x[i];
}

int degree(const Poly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != lcplx(0)) return static_cast<int>(i);
    return -1;
}

// Monic P_m from the recurrence, coefficients in the monomial basis.
std::vector<Poly> first_kind(const RecurrenceSpec& spec, int m) {
    std::vector<Poly> P{Poly{1}};
    Poly prev{0};
    for (int n = 1; n <= m; ++n) {
        Poly next = mul_linear(P.back(), widen(spec.coef_c(n)));
        Poly w = mul_linear(prev, widen(spec.coef_a(n)));
        if (spec.kind == FractionKind::RII) w = mul_linear(w, widen(spec.coef_b(n)));
        axpy(next, widen(spec.coef_lambda(n)), w);
        prev = P.back();
        P.push_back(std::move(next));
    }
    return P;
}

// L[p / D_m] by peeling one level at a time:
//   p = sum_k alpha_k x^k P_m + (x - a)(x - b) p~,  a = a_{m+1}, b = b_{m+1},
// so L[p/D_m] = alpha_m N_m + L[p~/D_{m-1}].
cplx apply_rational(const MomentFunctional& fn, Poly p, int m) {
    const RecurrenceSpec& spec = fn.spec();
    const bool two = spec.kind == FractionKind::RII;
    if (degree(p) > 2 * m) throw OutOfSpanError("numerator degree exceeds 2m");
    const std::vector<Poly> P = first_kind(spec, m);
    lcplx total = 0;
    for (int level = m; level >= 1; --level) {
        const Poly& Pm = P[static_cast<std::size_t>(level)];
        const lcplx a = widen(spec.coef_a(level + 1));
        if (!two) {
            // x^m P_m carries the top coefficient, P_m fixes the value at a.
            const lcplx beta = p.size() > static_cast<std::size_t>(2 * level) ? p[2 * level] : lcplx(0);
            axpy(p, beta, shift(Pm, level));
            const lcplx pa = eval(Pm, a);
            if (std::abs(pa) == 0) throw DegenerateError("P_m vanishes at the interpolation point");
            const lcplx alpha = eval(p, a) / pa;
            axpy(p, alpha, Pm);
            total += beta * widen(fn.norm(level));
            p = div_linear(p, a);
            continue;
        }
        const lcplx b = widen(spec.coef_b(level + 1));
        const bool repeated = std::abs(a - b) <= 1e-14L * std::max(1.0L, std::abs(a));
        auto cond = [&](const Poly& g) -> std::pair<lcplx, lcplx> {
            return {eval(g, a), repeated ? eval_derivative(g, a) : eval(g, b)};
        };
        // Pick the pair of basis elements x^{k1} P_m, x^{k2} P_m with the best conditioned 2x2 solve.
        int k1 = 0, k2 = level;
        long double best = -1;
        std::vector<std::pair<lcplx, lcplx>> cv;
        for (int k = 0; k <= level; ++k) cv.push_back(cond(shift(Pm, k)));
        for (int i = 0; i <= level; ++i)
            for (int j = i + 1; j <= level; ++j) {
                const long double d = std::abs(cv[i].first * cv[j].second - cv[j].first * cv[i].second);
                const long double s = (std::abs(cv[i].first) + std::abs(cv[i].second)) *
                                      (std::abs(cv[j].first) + std::abs(cv[j].second));
                const long double score = s > 0 ? d / s : 0;
                if (score > best) best = score, k1 = i, k2 = j;
            }
        const auto [u1, v1] = cv[static_cast<std::size_t>(k1)];
        const auto [u2, v2] = cv[static_cast<std::size_t>(k2)];
        const auto [pu, pv] = cond(p);
        const lcplx det = u1 * v2 - u2 * v1;
        if (!(best > 1e-30L) || std::abs(det) == 0)
            throw DegenerateError("interpolation conditions are singular at level " + std::to_string(level));
        const lcplx c1 = (pu * v2 - u2 * pv) / det;
        const lcplx c2 = (u1 * pv - pu * v1) / det;
        axpy(p, c1, shift(Pm, k1));
        axpy(p, c2, shift(Pm, k2));
        if (k2 == level) total += c2 * widen(fn.norm(level));
        p = div_linear(div_linear(p, a), b);
    }
    const lcplx p0 = p.empty() ? lcplx(0) : p[0];
    return narrow(total + p0 * widen(fn.N0()));
}

Poly numerator_for(const RecurrenceSpec& spec, const InverseFactors& f, int& m) {
    if (f.na < 0 || f.nb < 0) throw OutOfSpanError("negative factor count");
    if (spec.kind == FractionKind::RI && f.nb > 0) throw OutOfSpanError("R_I has no b-points");
    m = std::max(f.na, f.nb);
    Poly p{1};
    for (int j = f.na + 1; j <= m; ++j) p = mul_linear(p, widen(spec.coef_a(j + 1)));
    if (spec.kind == FractionKind::RII)
        for (int j = f.nb + 1; j <= m; ++j) p = mul_linear(p, widen(spec.coef_b(j + 1)));
    return p;
}

} // namespace

cplx MomentFunctional::norm(int n) const {
    if (n < 0) throw OutOfSpanError("negative index");
    if (static_cast<std::size_t>(n) < norms_.size()) return norms_[static_cast<std::size_t>(n)];
    if (!kappa_.empty()) {
        // N_n is the minimal solution of its recurrence; extend through the tails, not forward.
        const std::vector<cplx> k = kappa_tails(spec_, n + 1);
        cplx prod = 1.0;
        for (int j = 0; j <= n; ++j) prod *= k[static_cast<std::size_t>(j)];
        return prod;
    }
    cplx prev = norms_.size() >= 2 ? norms_[norms_.size() - 2] : 0.0;
    cplx cur = norms_.back();
    for (int k = static_cast<int>(norms_.size()); k <= n; ++k) {
        cplx next = spec_.kind == FractionKind::RI ? cur * spec_.coef_lambda(k + 1)
                                                   : cur - spec_.coef_lambda(k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

MomentFunctional build_RI(const RecurrenceSpec& spec, int nmax, std::optional<cplx> l1) {
    if (spec.kind != FractionKind::RI) throw DomainError("build_RI needs an R_I recurrence");
    MomentFunctional fn(spec);
    fn.n0_ = l1 ? *l1 : spec.coef_lambda(1);
    if (fn.n0_ == 0.0) throw DegenerateError("L[1] = lambda_1 is zero");
    fn.norms_.push_back(fn.n0_);
    for (int n = 1; n <= nmax; ++n) {
        const cplx lam = spec.coef_lambda(n + 1);
        if (lam == 0.0) throw DegenerateError("lambda_" + std::to_string(n + 1) + " is zero");
        fn.norms_.push_back(fn.norms_.back() * lam);
    }
    fn.basis_values_["R_1"] = 0.0;
    fn.basis_values_["x^0 R_1"] = 0.0;
    if (nmax >= 1) fn.basis_values_["1/(x-a_2)"] = -fn.n0_ / (spec.coef_a(2) - spec.coef_c(1));
    return fn;
}

MomentFunctional build_RII(const RecurrenceSpec& spec, cplx N0, cplx N1, int nmax) {
    if (spec.kind != FractionKind::RII) throw DomainError("build_RII needs an R_II recurrence");
    MomentFunctional fn(spec);
    fn.n0_ = N0;
    fn.n1_ = N1;
    fn.norms_ = {N0, N1};
    for (int n = 2; n <= nmax; ++n)
        fn.norms_.push_back(fn.norms_[n - 1] - spec.coef_lambda(n) * fn.norms_[n - 2]);
    const cplx c1 = spec.coef_c(1), a2 = spec.coef_a(2), b2 = spec.coef_b(2);
    if (a2 == c1 || b2 == c1) throw DegenerateError("a_2 or b_2 equals c_1");
    fn.basis_values_["1/(x-a_2)"] = (N1 - N0) / (a2 - c1);
    fn.basis_values_["1/(x-b_2)"] = (N1 - N0) / (b2 - c1);
    if (a2 == b2) fn.basis_values_["1/(x-a_2)^2"] = (N0 - N1) / ((a2 - c1) * (a2 - c1));
    return fn;
}

MomentFunctional build_RII_integral(const RecurrenceSpec& spec, int nmax) {
    const std::vector<cplx> k = kappa_tails(spec, std::max(nmax + 1, 2));
    MomentFunctional fn = build_RII(spec, k[0], k[0] - 1.0, 1);
    fn.kappa_ = k;
    // N_n = kappa_1 ... kappa_{n+1}; forward use of N_n = N_{n-1} - lambda_n N_{n-2} loses a digit per step.
    fn.norms_ = {k[0]};
    for (int n = 1; n <= std::max(nmax, 1); ++n)
        fn.norms_.push_back(fn.norms_.back() * k[static_cast<std::size_t>(n)]);
    fn.n1_ = fn.norms_[1];
    return fn;
}

std::vector<cplx> kappa_tails(const RecurrenceSpec& spec, int jmax, const KappaOptions& opt) {
    if (jmax < 1) throw DomainError("kappa_tails needs jmax >= 1");
    auto seed = [&](int j) -> cplx {
        if (opt.seed == TailSeed::Zero) return 0.0;
        // Fixed point of x = lambda/(1 - x), the smaller root.
        const cplx lam = spec.coef_lambda(j);
        const cplx s = std::sqrt(1.0 - 4.0 * lam);
        const cplx r1 = (1.0 - s) / 2.0, r2 = (1.0 + s) / 2.0;
        return std::abs(r1) <= std::abs(r2) ? r1 : r2;
    };
    auto run = [&](int depth) {
        std::vector<cplx> out(static_cast<std::size_t>(jmax));
        cplx x = seed(depth + 1);
        for (int j = depth; j >= 2; --j) {
            x = spec.coef_lambda(j) / (1.0 - x);
            if (j <= jmax) out[static_cast<std::size_t>(j - 1)] = x;
        }
        out[0] = 1.0 / (1.0 - x);
        return out;
    };
    int depth = std::max(opt.depth, jmax + 1);
    std::vector<cplx> prev = run(depth);
    for (depth *= 2; depth <= opt.max_depth; depth *= 2) {
        std::vector<cplx> cur = run(depth);
        double worst = 0.0;
        for (std::size_t i = 0; i < cur.size(); ++i)
            worst = std::max(worst, std::abs(cur[i] - prev[i]) / std::max(1.0, std::abs(cur[i])));
        if (worst <= opt.tol) return cur;
        prev = std::move(cur);
    }
    throw ConvergenceError("kappa tails did not converge up to depth " + std::to_string(opt.max_depth));
}

cplx functional_apply(const MomentFunctional& fn, const BasisDescriptor& basis) {
    if (const auto* x = std::get_if<XkSn>(&basis)) {
        if (x->n < 0 || x->k < 0 || x->k > x->n) throw OutOfSpanError("x^k S_n needs 0 <= k <= n");
        return x->k < x->n ? cplx(0.0) : fn.norm(x->n);
    }
    if (const auto* f = std::get_if<InverseFactors>(&basis)) {
        int m = 0;
        Poly p = numerator_for(fn.spec(), *f, m);
        return apply_rational(fn, std::move(p), m);
    }
    const auto& r = std::get<RationalNumerator>(basis);
    if (r.m < 0) throw OutOfSpanError("negative level");
    Poly p;
    for (cplx c : r.coeffs) p.push_back(widen(c));
    if (p.empty()) return 0.0;
    return apply_rational(fn, std::move(p), r.m);
}

} // namespace rfrac
