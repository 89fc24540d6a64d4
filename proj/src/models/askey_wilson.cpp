#include "common.hpp"
#include "rfrac/identities.hpp"

namespace rfrac {
namespace detail {
namespace {

// Parameters of the modified Askey-Wilson recurrence; S = alpha beta^2 delta.
struct Values {
    QContext ctx;
    cplx q, al, be, de, S;

    cplx pw(int e) const { return ipow(q, e); }
};

Values values(cplx q, cplx al, cplx be, cplx de) { return {QContext(q), q, al, be, de, al * be * be * de}; }

Values values(const Params& p) { return values(p.at("q"), p.at("alpha"), p.at("beta"), p.at("delta")); }

void need_recurrence(const Values& v) {
    if (v.al * v.de == 0.0) throw DomainError("the recurrence needs alpha delta != 0");
}

cplx u_coef(const Values& v, int m) {
    const int n = m - 1;
    const cplx q = v.q, S = v.S, ad = v.al * v.de, b2 = v.be * v.be;
    return 1.0 - v.be * v.pw(n - 1) *
                     ((1.0 + S * v.pw(2 * n - 1)) * (q + ad) - v.pw(n - 1) * (1.0 + q) * (q + b2) * ad) /
                     ((1.0 - S * v.pw(2 * n - 2)) * (1.0 - S * v.pw(2 * n)));
}

cplx v_coef(const Values& v, int m) {
    const int n = m - 1;
    const cplx q = v.q, S = v.S, ad = v.al * v.de, b2 = v.be * v.be;
    return (v.al + v.de) * v.pw(n - 1) *
           ((1.0 + S * v.pw(2 * n - 1)) * (q + b2) - v.pw(n - 1) * (1.0 + q) * b2 * (q + ad)) /
           (2.0 * (1.0 - S * v.pw(2 * n - 2)) * (1.0 - S * v.pw(2 * n)));
}

cplx lambda_coef(const Values& v, int m) {
    const int n = m - 1;
    const cplx S = v.S;
    return S * v.pw(2 * n - 2) * (1.0 - v.pw(n)) * (1.0 - S * v.pw(n - 2)) * (1.0 - v.al * v.de * v.pw(n - 1)) *
           (1.0 - v.be * v.be * v.pw(n - 1)) /
           ((1.0 - S * v.pw(2 * n - 3)) * std::pow(1.0 - S * v.pw(2 * n - 2), 2) * (1.0 - S * v.pw(2 * n - 1)) *
            u_coef(v, n) * u_coef(v, m));
}

RecurrenceSpec make_spec(const Values& v) {
    return RecurrenceSpec::r2(
        [v](int n) { return v_coef(v, n) / u_coef(v, n); }, [v](int n) { return lambda_coef(v, n); },
        [v](int n) {
            need_recurrence(v);
            const cplx x = v.be * v.de;
            return (x * v.pw(n - 2) + v.pw(2 - n) / x) / 2.0;
        },
        [v](int n) {
            need_recurrence(v);
            const cplx x = v.al * v.be;
            return (x * v.pw(n - 2) + v.pw(2 - n) / x) / 2.0;
        });
}

// f(x) = sqrt(1 - x^2) times this; f(x) dx is the measure whose Stieltjes transform is the 8W7 below.
PointFn smooth_f(const Values& v) {
    return [v](cplx x) {
        const cplx e = unit_point(x), q = v.q, al = v.al, be = v.be, de = v.de;
        return 4.0 / (2 * pi) *
               prod(v.ctx, {q * e * e, q / (e * e), al * be * e, al * be / e, be * de * e, be * de / e, al * de,
                            be * be, q}) /
               prod(v.ctx, {al * e, al / e, be * e * e, be / (e * e), de * e, de / e, be, be, v.S});
    };
}

cplx stieltjes_closed(const Values& v, cplx z) {
    const cplx u = joukowski_outer(z), q = v.q, r = v.S / q;
    const cplx pre = 2.0 / u * (1.0 - q / (u * u)) * (1.0 - r) /
                     ((1.0 - v.al / u) * (1.0 - v.be / (u * u)) * (1.0 - v.be) * (1.0 - v.de / u));
    return pre * w87(v.ctx, q / (u * u), q, q / (v.al * u), q / v.be, q / (v.be * u * u), q / (v.de * u), r).value;
}

cplx G_n(const Values& v, int n, cplx u) {
    const auto& c = v.ctx;
    const cplx q = v.q, al = v.al, be = v.be, de = v.de, S = v.S, qn = v.pw(n), qn1 = v.pw(n + 1);
    return ipow(2.0 * u, -n) *
           prod(c, {S * v.pw(2 * n - 1), al * qn1 / u, be * qn1 / (u * u), be * qn1, de * qn1 / u}) /
           prod(c, {qn1, v.pw(n + 2) / (u * u), al * be * qn * u, al * be * qn / u, al * de * qn, be * be * qn,
                    be * de * qn * u, be * de * qn / u}) *
           w87(c, qn1 / (u * u), qn1, q / (al * u), q / be, q / (be * u * u), q / (de * u), S * v.pw(n - 1)).value;
}

// Shared by both Askey-Wilson-type models: fraction, minimal solution and spectral measure.
class AskeyWilsonBase : public Model {
public:
    AskeyWilsonBase(std::string name, Params p, Values v)
        : Model(std::move(name), std::move(p), make_spec(v), Coordinate::Joukowski), v_(std::move(v)) {}

    Measure spectral_measure() const override {
        const cplx u1 = u_coef(v_, 1);
        const PointFn f = smooth_f(v_);
        return {Interval{-1.0, 1.0, {}, [u1, f](cplx x) { return u1 * f(x); }}, "[-1, 1]"};
    }

    cplx cf_closed(cplx z) const override { return u_coef(v_, 1) * stieltjes_closed(v_, z); }

    cplx minimal_closed_form(int n, cplx z) const override {
        need_recurrence(v_);
        cplx r = G_n(v_, n, joukowski_outer(z));
        for (int k = 1; k <= n; ++k) r /= u_coef(v_, k);
        return r;
    }

    std::vector<cplx> interior_points() const override {
        return {1.5, cplx(0.3, 0.8), cplx(-2.0, -0.5)};
    }

protected:
    Values v_;
};

class Rahman final : public AskeyWilsonBase {
public:
    Rahman(Params p, Values v) : AskeyWilsonBase("Rahman52", std::move(p), std::move(v)) {}

    BiorthFamily biorth() const override {
        const Values v = v_;
        const cplx sb = std::sqrt(v.be);
        BiorthFamily f;
        f.left = [v, sb](int n, cplx x) {
            const cplx e = unit_point(x), q = v.q, al = v.al;
            return phi_value(v.ctx, {ipow(q, -n), v.S * ipow(q, n - 1), al * e, al / e, q * al * sb, -q * al * sb},
                             {al * v.de, q * al * v.be * e, q * al * v.be / e, al * sb, -al * sb}, q);
        };
        f.right = [v](int n, cplx x) {
            const cplx e = unit_point(x), q = v.q, de = v.de;
            return phi_value(v.ctx, {ipow(q, -n), v.S * ipow(q, n - 1), de * e, de / e},
                             {v.al * de, v.be * de * e, v.be * de / e}, q);
        };
        f.norm = [v](int n) { return mass(v) * tail(v, n, false); };
        f.printed_norm = [v](int n) { return mass(v) * tail(v, n, true); };
        f.measure = {Interval{-1.0, 1.0, {}, [v](cplx x) {
                                  const cplx e = unit_point(x), q = v.q, al = v.al, be = v.be, de = v.de;
                                  return 4.0 / (2 * pi) *
                                         prod(v.ctx, {q * e * e, q / (e * e), q * al * be * e, q * al * be / e,
                                                      be * de * e, be * de / e}) /
                                         prod(v.ctx, {al * e, al / e, be * e * e, be / (e * e), de * e, de / e});
                              }},
                     "[-1, 1]"};
        f.validity = "max(|alpha|, |beta|, |delta|) < 1";
        return f;
    }

    // Total mass of the biorthogonality weight, and the n-dependent part of the norm.
    static cplx mass(const Values& v) {
        const auto& c = v.ctx;
        return prod(c, {v.be, v.q * v.be, v.S}) /
               ((1.0 - v.al * v.al * v.be) * prod(c, {v.al * v.de, v.be * v.be, v.q}));
    }

    static cplx tail(const Values& v, int n, bool printed) {
        const auto& c = v.ctx;
        const cplx ad = v.al * v.de;
        const cplx head = q_pochhammer(c, v.S * ipow(v.q, n), inf) / q_pochhammer(c, v.S, inf) *
                          prod(c, {v.be * v.be, v.q}, n) * std::pow(ad, n) / q_pochhammer(c, ad, n);
        if (printed) {
            const cplx x = v.al * v.al * v.be * v.de;
            return head * (1.0 - x * ipow(v.q, 2 * n - 1)) / (1.0 - x * ipow(v.q, n - 1));
        }
        return head * (1.0 - v.S * ipow(v.q, n - 1)) / (1.0 - v.S * ipow(v.q, 2 * n - 1));
    }
};

// Terminating 4phi3 of the rational Chebyshev family. Its terms alternate and grow like q^{-n},
// so it is summed in long double.
cplx g_fn(const Values& v, int n, cplx x, cplx al, cplx de) {
    using lc = std::complex<long double>;
    auto widen = [](cplx z) { return lc(z.real(), z.imag()); };
    const lc q = widen(v.q), a = widen(al), ad = a * widen(de), e = widen(unit_point(x));
    lc term = 1, sum = 1;
    for (int k = 1; k <= n; ++k) {
        const lc qk = std::pow(q, k - 1);
        term *= (1.0L - std::pow(q, k - 1 - n)) * (1.0L - ad * std::pow(q, n) * qk) * (1.0L - a * e * qk) *
                (1.0L - a / e * qk) /
                ((1.0L - q * qk) * (1.0L - ad * qk) * (1.0L - q * a * e * qk) * (1.0L - q * a / e * qk)) * q;
        sum += term;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

PointFn elementary_weight(cplx al, cplx de) {
    return [al, de](cplx x) { return 2.0 / pi / ((1.0 - 2.0 * al * x + al * al) * (1.0 - 2.0 * de * x + de * de)); };
}

class ChebyRational final : public AskeyWilsonBase {
public:
    ChebyRational(Params p, Values v) : AskeyWilsonBase("ChebyRational51", std::move(p), std::move(v)) {}

    BiorthFamily biorth() const override {
        const Values v = v_;
        BiorthFamily f;
        f.left = [v](int m, cplx x) { return g_fn(v, m, x, v.de, v.al); };
        f.right = [v](int n, cplx x) { return g_fn(v, n, x, v.al, v.de); };
        f.norm = [v](int n) {
            const cplx ad = v.al * v.de, qq = q_pochhammer(v.ctx, v.q, n), aq = q_pochhammer(v.ctx, ad, n);
            return std::pow(ad, n) * qq * qq / (aq * aq * (1.0 - ad * ipow(v.q, 2 * n)));
        };
        f.measure = {Interval{-1.0, 1.0, {}, elementary_weight(v.al, v.de)}, "[-1, 1]"};
        f.validity = "max(|alpha|, |delta|) < 1";
        return f;
    }
};

void check_common(const std::string& name, cplx q) { require(std::abs(q) < 1.0 && q != 0.0, name, "0 < |q| < 1"); }

} // namespace

ModelPtr make_rahman(const Params& p) {
    const std::string name = "Rahman52";
    check_common(name, p.at("q"));
    require(std::abs(p.at("alpha")) < 1.0 && std::abs(p.at("beta")) < 1.0 && std::abs(p.at("delta")) < 1.0, name,
            "max(|alpha|, |beta|, |delta|) < 1");
    require(p.at("beta") != 0.0, name, "beta != 0");
    return std::make_shared<Rahman>(p, values(p));
}

ModelPtr make_cheby_rational(const Params& p) {
    const std::string name = "ChebyRational51";
    check_common(name, p.at("q"));
    require(std::abs(p.at("alpha")) < 1.0 && std::abs(p.at("delta")) < 1.0, name, "max(|alpha|, |delta|) < 1");
    Params full = p;
    full["beta"] = p.at("q");
    return std::make_shared<ChebyRational>(p, values(full));
}

} // namespace detail

namespace {

detail::Values aw_values(const Params& p) { return detail::values(detail::resolve("Rahman52", p)); }

// Integral over [-1, 1] of the q-beta integrand; `numer_ab` and `denom_extra` are the two slots that vary.
cplx theta_integral(const detail::Values& v, cplx numer_ab, cplx denom_extra, const QuadratureConfig& cfg) {
    using namespace detail;
    auto smooth = [=](cplx x) {
        const cplx e = unit_point(x), q = v.q, al = v.al, be = v.be, de = v.de;
        return 4.0 / (2 * pi) *
               prod(v.ctx, {q * e * e, q / (e * e), numer_ab * e, numer_ab / e, be * de * e, be * de / e, al * de,
                            be * be, q}) /
               prod(v.ctx, {al * e, al / e, be * e * e, be / (e * e), de * e, de / e, be, denom_extra, v.S});
    };
    return integrate(Measure{Interval{-1.0, 1.0, {}, smooth}, ""}, [](cplx) { return cplx(1.0); }, cfg);
}

} // namespace

Sides stieltjes_w87(const Params& p, cplx z, const QuadratureConfig& cfg) {
    const auto v = aw_values(p);
    const Measure m{Interval{-1.0, 1.0, {}, detail::smooth_f(v)}, "[-1, 1]"};
    return {stieltjes(m, z, cfg), detail::stieltjes_closed(v, z)};
}

Sides herglotz_value(const Params& p, const QuadratureConfig& cfg) {
    const auto v = aw_values(p);
    const cplx r = v.S / v.q;
    if (!(std::abs(r) < 1.0)) throw DomainError("need |alpha beta^2 delta / q| < 1");
    const Measure m{Interval{-1.0, 1.0, {}, detail::smooth_f(v)}, "[-1, 1]"};
    return {normalization(m, cfg),
            (1.0 - r) / (1.0 - v.be) * phi_value(v.ctx, {v.q, v.q / v.be}, {v.q * v.be}, r)};
}

Sides qbeta_integral(const Params& p, const QuadratureConfig& cfg) {
    const auto v = aw_values(p);
    return {theta_integral(v, v.q * v.al * v.be, v.q * v.be, cfg), 1.0 / (1.0 - v.al * v.al * v.be)};
}

Sides connection_integral(const Params& p, cplx gamma, const QuadratureConfig& cfg) {
    const auto v = aw_values(p);
    if (!(std::abs(gamma) < 1.0)) throw DomainError("need |gamma| < 1");
    const cplx a2 = v.al * v.al;
    const cplx rhs = detail::prod(v.ctx, {gamma, a2 * gamma}) / detail::prod(v.ctx, {v.q * v.be, a2 * v.be}) *
                     phi_value(v.ctx, {a2 * v.be, v.al * v.de, v.q * v.be / gamma},
                               {a2 * gamma, v.be * v.be * v.al * v.de}, gamma);
    return {theta_integral(v, v.al * gamma, v.q * v.be, cfg), rhs};
}

cplx cheby_g(const Params& p, int n, cplx x) {
    const auto full = detail::resolve("ChebyRational51", p);
    const auto v = detail::values(full.at("q"), full.at("alpha"), full.at("q"), full.at("delta"));
    return detail::g_fn(v, n, x, v.al, v.de);
}

cplx cheby_f(const Params& p, int n, cplx x) {
    const auto full = detail::resolve("ChebyRational51", p);
    const cplx al = full.at("alpha");
    return cheby_g(full, n, x) / (1.0 - 2.0 * al * x + al * al);
}

cplx cheby_f_sum(const Params& p, int n, cplx x, bool printed_exponent) {
    using lc = std::complex<long double>;
    auto widen = [](cplx v) { return lc(v.real(), v.imag()); };
    const auto full = detail::resolve("ChebyRational51", p);
    const lc q = widen(full.at("q")), al = widen(full.at("alpha")), ad = al * widen(full.at("delta"));
    const lc lx = widen(x), adn = ad * std::pow(q, n);
    // Terms reach q^{-n^2/2} and alternate, so the sum is carried in long double.
    lc s = 0, binom = 1, ratio = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            binom *= (1.0L - std::pow(q, n - k + 1)) / (1.0L - std::pow(q, k));
            ratio *= (1.0L - adn * std::pow(q, k - 1)) / (1.0L - ad * std::pow(q, k - 1));
        }
        const int e2 = printed_exponent ? k * (1 - k) : k * (k + 1) - 2 * n * k;  // twice the exponent
        const lc qk = std::pow(q, k);
        s += binom * ratio * ((k % 2) ? -1.0L : 1.0L) * std::pow(q, e2 / 2) / (1.0L - 2.0L * al * qk * lx + al * al * qk * qk);
    }
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

Sides elementary_integral(cplx alpha, cplx delta, const QuadratureConfig& cfg) {
    if (!(std::abs(alpha) < 1.0 && std::abs(delta) < 1.0)) throw DomainError("need max(|alpha|, |delta|) < 1");
    const Measure m{Interval{-1.0, 1.0, {}, detail::elementary_weight(alpha, delta)}, "[-1, 1]"};
    return {normalization(m, cfg), 1.0 / (1.0 - alpha * delta)};
}

} // namespace rfrac
