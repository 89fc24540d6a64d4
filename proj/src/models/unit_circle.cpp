#include "common.hpp"
#include "rfrac/identities.hpp"

namespace rfrac {
namespace detail {
namespace {

struct Values {
    QContext ctx;
    cplx q, a, b, t1, t2, T, sq, q4;

    cplx pw(double e) const { return std::pow(q, e); }
};

Values values(const Params& p) {
    const cplx q = p.at("q"), a = p.at("a"), b = p.at("b"), t1 = p.at("t1"), t2 = p.at("t2");
    return {QContext(q), q, a, b, t1, t2, a * b * t1 * t2, std::sqrt(q), std::pow(q, 0.25)};
}

// Coefficients from the Askey-Wilson recurrence, written with m = n - 1.
cplx DA(const Values& v, int m) { return (1.0 - v.T * v.pw(2 * m - 1)) * (1.0 - v.T * v.pw(2 * m)); }
cplx DB(const Values& v, int m) { return (1.0 - v.T * v.pw(2 * m - 2)) * (1.0 - v.T * v.pw(2 * m - 1)); }

cplx U(const Values& v, int k) {
    const int m = k - 1;
    const cplx qm = v.pw(m);
    return (1.0 - v.t2) / (2.0 * v.q4) -
           v.a * v.pw(m + 0.75) * (1.0 - v.T * v.pw(m - 1)) * (1.0 - v.b * v.t2 * qm) *
               (1.0 - v.t1 * v.t2 * v.pw(m - 1)) / (2.0 * DA(v, m)) +
           v.t2 * (1.0 - qm) * (1.0 - v.a * v.b * qm) * (1.0 - v.a * v.t1 * v.pw(m - 1)) / (2.0 * v.q4 * DB(v, m));
}

cplx V(const Values& v, int k) {
    const int m = k - 1;
    const cplx qm = v.pw(m);
    return v.q4 * (1.0 - 1.0 / v.t2) / 2.0 +
           v.q4 * (1.0 - v.T * v.pw(m - 1)) * (1.0 - v.b * v.t2 * qm) * (1.0 - v.t1 * v.t2 * v.pw(m - 1)) /
               (2.0 * v.t2 * DA(v, m)) -
           v.pw(-0.75) * v.b * v.t1 * v.t2 * v.pw(m - 1) * (1.0 - qm) * (1.0 - v.a * v.b * qm) *
               (1.0 - v.a * v.t1 * v.pw(m - 1)) / (2.0 * DB(v, m));
}

cplx LAM(const Values& v, int n) {
    const cplx kap = -v.a * v.t2 * v.pw(n - 1.5) * (1.0 - v.T * v.pw(n - 3)) * (1.0 - v.b * v.t2 * v.pw(n - 2)) *
                     (1.0 - v.t1 * v.t2 * v.pw(n - 3)) * (1.0 - v.pw(n - 1)) * (1.0 - v.a * v.b * v.pw(n - 1)) *
                     (1.0 - v.a * v.t1 * v.pw(n - 2)) / (4.0 * DA(v, n - 2) * DB(v, n - 1));
    return kap / (U(v, n) * U(v, n - 1));
}

cplx node_a(const Values& v, int n) { return v.b * v.t1 * v.pw(n - 2.5); }
cplx node_b(const Values& v, int n) { return v.pw(1.5 - n) / (v.a * v.t2); }

// Displayed u, v and lambda, indexed like the spec coefficients.
cplx printed_u(const Values& v, int k) {
    const int n = k - 1;
    const cplx T = v.T, q = v.q, qn = v.pw(n);
    return 1.0 / (2.0 * v.q4 * (1.0 - T * v.pw(2 * n - 2)) * (1.0 - T * v.pw(2 * n))) *
           (1.0 - v.pw(n - 1) * ((1.0 + T / q * v.pw(2 * n)) *
                                     (q * v.t2 + v.a * q * q + v.a * v.t1 * v.t2 + v.a * v.b * v.t2 * q) -
                                 T / q * qn * (1.0 + q) * (v.t2 + q * v.a + q / v.b + q * q / v.t1)));
}

cplx printed_v(const Values& v, int k) {
    const int n = k - 1;
    const cplx T = v.T, q = v.q, qn = v.pw(n);
    return v.q4 / (2.0 * (1.0 - T * v.pw(2 * n - 2)) * (1.0 - T * v.pw(2 * n))) *
           (1.0 - v.pw(n - 1) * ((1.0 + T / q * v.pw(2 * n)) *
                                     (v.b * q + v.t1 + v.a * v.b * v.t1 + v.b * v.t1 * v.t2 / q) -
                                 T / q * qn * (1.0 + q) * (v.b + v.t1 / q + q / v.t2 + 1.0 / v.a)));
}

cplx printed_lambda(const Values& v, int k) {
    const int n = k - 1;
    const cplx T = v.T, qn = v.pw(n);
    return v.a * v.t2 * qn * (qn - 1.0) * (1.0 - T * v.pw(n - 2)) * (1.0 - v.b * v.t2 * v.pw(n - 1)) *
           (1.0 - v.t1 * v.t2 * v.pw(n - 2)) * (1.0 - v.a * v.b * qn) * (1.0 - v.a * v.t1 * v.pw(n - 1)) /
           (4.0 * v.sq * (1.0 - T * v.pw(2 * n - 3)) * std::pow(1.0 - T * v.pw(2 * n - 2), 2) *
            (1.0 - T * v.pw(2 * n - 1)) * printed_u(v, n) * printed_u(v, k));
}

// prod_{k=-1..n} U_k
cplx U_product(const Values& v, int n) {
    cplx r = 1.0;
    for (int k = -1; k <= n; ++k) r *= U(v, k);
    return r;
}

cplx X_outer(const Values& v, int n, cplx z) {
    const auto& c = v.ctx;
    const cplx q = v.q, T = v.T;
    return std::pow(v.q4 / 2.0, n) *
           prod(c, {T * v.pw(2 * n - 1), v.t2 * v.pw(n + 1), v.a * v.pw(n + 2), v.b * v.pw(n + 1.5) / z,
                    v.t1 * v.pw(n + 0.5) / z}) /
           prod(c, {v.pw(n + 1), v.pw(n + 2.5) / z, v.a * v.t2 * v.pw(n + 0.5) * z, v.b * v.t2 * v.pw(n),
                    v.t1 * v.t2 * v.pw(n - 1), v.a * v.b * v.pw(n + 1), v.a * v.t1 * v.pw(n),
                    v.b * v.t1 * v.pw(n - 0.5) / z}) *
           w87(c, v.pw(n + 1.5) / z, v.pw(n + 1), v.pw(1.5) / (v.t2 * z), v.sq / (v.a * z), q / v.b,
               q * q / v.t1, T * v.pw(n - 1))
               .value /
           U_product(v, n);
}

cplx X_inner(const Values& v, int n, cplx z) {
    const auto& c = v.ctx;
    const cplx q = v.q, T = v.T;
    return std::pow(z / (2.0 * v.q4), n) *
           prod(c, {T * v.pw(2 * n - 1), v.t2 * z * v.pw(n + 0.5), v.a * z * v.pw(n + 1.5), v.b * v.pw(n + 1),
                    v.t1 * v.pw(n)}) /
           prod(c, {v.pw(n + 1), z * v.pw(n + 1.5), v.a * v.t2 * v.pw(n + 0.5) * z, v.b * v.t2 * v.pw(n),
                    v.t1 * v.t2 * v.pw(n - 1), v.a * v.b * v.pw(n + 1), v.a * v.t1 * v.pw(n),
                    v.b * v.t1 * v.pw(n - 0.5) / z}) *
           w87(c, v.pw(n + 0.5) * z, v.pw(n + 1), q / v.t2, 1.0 / v.a, v.sq * z / v.b, q * v.sq * z / v.t1,
               T * v.pw(n - 1))
               .value /
           U_product(v, n);
}

bool inside(const Values& v, cplx z) {
    const double r = std::abs(v.sq), d = std::abs(z) - r;
    if (std::abs(d) <= 1e-12 * r) throw BranchBoundaryError("|z| = |q|^(1/2) separates the two branches");
    return d < 0;
}

cplx weight_f(const Values& v, cplx t) {
    const cplx q = v.q, sq = v.sq, a = v.a, b = v.b, t1 = v.t1, t2 = v.t2;
    return prod(v.ctx, {sq * t, sq / t, a * t2 * sq * t, b * t1 * sq / t, b * t2, a * t1, a * b * q, t1 * t2 / q, q}) /
           prod(v.ctx, {a * sq * t, b * sq / t, a * q, b * q, t1, t2, t2 * t / sq, t1 / (t * sq), v.T});
}

// r_n(z; a, b, t1, t2)
cplx r_fn(const Values& v, int n, cplx z, cplx a, cplx b, cplx t1, cplx t2) {
    const cplx T = a * b * t1 * t2;
    return phi_value(v.ctx, {ipow(v.q, -n), T * ipow(v.q, n - 1), t2 * z / v.sq, t2},
                     {a * t2 * v.sq * z, b * t2, t1 * t2 / v.q}, v.q);
}

class UnitCircle final : public Model {
public:
    UnitCircle(Params p, Values v, RecurrenceSpec s)
        : Model("UnitCircle41", std::move(p), std::move(s), Coordinate::Plain), v_(std::move(v)) {}

    Measure spectral_measure() const override {
        const Values v = v_;
        const cplx u1 = U(v, 1);
        auto density = [v, u1](cplx t) {
            return I * u1 / (pi * v.q4) * (1.0 - v.b * v.t1 / (v.sq * t)) / ((1.0 - v.t1 / v.q) * (1.0 - v.b)) *
                   weight_f(v, t);
        };
        return {CircleContour{std::abs(v.sq), density}, "|t| = |q|^(1/2)"};
    }

    cplx cf_closed(cplx z) const override {
        const Values& v = v_;
        const cplx q = v.q, T = v.T, sq = v.sq, u1 = U(v, 1);
        if (inside(v, z))
            return 2.0 * u1 / v.q4 * (1.0 - T / q) * (1.0 - sq * z) /
                   ((1.0 - v.b) * (1.0 - v.t1 / q) * (1.0 - v.t2 * z / sq) * (1.0 - v.a * z * sq)) *
                   w87(v.ctx, z * sq, q, q / v.t2, 1.0 / v.a, sq * z / v.b, q * sq * z / v.t1, T / q).value;
        return 2.0 * u1 * v.q4 * (1.0 - T / q) * (1.0 - q * sq / z) /
               (z * (1.0 - v.t2) * (1.0 - v.a * q) * (1.0 - v.b * sq / z) * (1.0 - v.t1 / (sq * z))) *
               w87(v.ctx, q * sq / z, q, q * sq / (v.t2 * z), sq / (v.a * z), q / v.b, q * q / v.t1, T / q).value;
    }

    cplx minimal_closed_form(int n, cplx z) const override {
        return inside(v_, z) ? X_inner(v_, n, z) : X_outer(v_, n, z);
    }

    BiorthFamily biorth() const override {
        const Values v = v_;
        BiorthFamily f;
        f.left = [v](int k, cplx t) { return r_fn(v, k, t, v.a, v.b, v.t1, v.t2); };
        f.right = [v](int n, cplx t) { return r_fn(v, n, 1.0 / t, v.b, v.a, v.t2, v.t1); };
        f.norm = [v](int n) {
            const auto& c = v.ctx;
            const cplx r = v.t1 * v.t2 / v.q;
            return -std::pow(r, n) * prod(c, {v.q, v.a * v.b * v.q, v.T * ipow(v.q, n - 1)}, n) /
                   (q_pochhammer(c, r, n) * q_pochhammer(c, v.T, 2 * n));
        };
        f.measure = {CircleContour{1.0, [v](cplx t) { return I * weight_f(v, t) / (2 * pi * t); }}, "|t| = 1"};
        f.validity = "|a|, |b| < 1, |t1|, |t2| < |q|^(1/2)";
        return f;
    }

    std::vector<cplx> interior_points() const override {
        const double r = std::abs(v_.sq);
        return {0.55 * r, cplx(0.15, 0.4) * r, cplx(-0.3, 0.2) * r,
                2.8 * r, cplx(-1.4, 1.4) * r, cplx(0.5, -2.0) * r};
    }

    std::optional<RecurrenceSpec> printed_spec() const override {
        const Values v = v_;
        return RecurrenceSpec::r2([v](int n) { return -printed_v(v, n) / printed_u(v, n); },
                                  [v](int n) { return printed_lambda(v, n); },
                                  [v](int n) { return node_a(v, n); }, [v](int n) { return node_b(v, n); });
    }

private:
    Values v_;
};

} // namespace

ModelPtr make_unit_circle(const Params& p) {
    const std::string name = "UnitCircle41";
    const cplx q = p.at("q");
    require(std::abs(q) < 1.0 && q != 0.0, name, "0 < |q| < 1");
    require(std::abs(p.at("a")) < 1.0 && p.at("a") != 0.0, name, "0 < |a| < 1");
    require(std::abs(p.at("b")) < 1.0 && p.at("b") != 0.0, name, "0 < |b| < 1");
    const double r = std::sqrt(std::abs(q));
    require(std::abs(p.at("t1")) < r && p.at("t1") != 0.0, name, "0 < |t1| < |q|^(1/2)");
    require(std::abs(p.at("t2")) < r && p.at("t2") != 0.0, name, "0 < |t2| < |q|^(1/2)");
    Values v = values(p);
    auto spec = RecurrenceSpec::r2([v](int n) { return -V(v, n) / U(v, n); }, [v](int n) { return LAM(v, n); },
                                   [v](int n) { return node_a(v, n); }, [v](int n) { return node_b(v, n); });
    return std::make_shared<UnitCircle>(p, std::move(v), std::move(spec));
}

} // namespace detail

cplx unit_circle_weight(const Params& p, cplx t) {
    return detail::weight_f(detail::values(detail::resolve("UnitCircle41", p)), t);
}

} // namespace rfrac
