#include "common.hpp"
#include "rfrac/identities.hpp"

namespace rfrac {
namespace detail {
namespace {

struct Values {
    QContext ctx;
    cplx q, a, b, sq;
};

Values values(const Params& p) {
    const cplx q = p.at("q");
    return {QContext(q), q, p.at("a"), p.at("b"), std::sqrt(q)};
}

// Monic polynomial of the first kind.
cplx P(const Values& v, int n, cplx z) {
    const auto& c = v.ctx;
    return std::pow(v.sq, n) * q_pochhammer(c, v.b, n) / q_pochhammer(c, v.a * v.q, n) *
           phi_value(c, {ipow(v.q, -n), v.a * v.q}, {ipow(v.q, 1 - n) / v.b}, z * v.sq / v.b);
}

// Partner family: P with a and b exchanged.
cplx Q(const Values& v, int n, cplx z) {
    Values w = v;
    std::swap(w.a, w.b);
    return P(w, n, z);
}

cplx X_inner(const Values& v, int n, cplx z) {
    const auto& c = v.ctx;
    const cplx qn = std::pow(v.q, n + 1);
    return std::pow(z, n) * prod(c, {v.a * qn, v.b * qn}) / prod(c, {qn, v.a * v.b * qn}) *
           phi_value(c, {1.0 / v.a, qn}, {v.b * qn}, v.a * z * v.sq);
}

cplx X_outer(const Values& v, int n, cplx z) {
    const auto& c = v.ctx;
    const cplx qn = std::pow(v.q, n + 1);
    return std::pow(v.sq, n) * prod(c, {v.a * qn * v.q, v.a * qn}) / prod(c, {qn, v.a * v.b * qn}) *
           phi_value(c, {v.q / v.b, qn}, {v.a * qn * v.q}, v.b * v.sq / z);
}

bool inside(const Values& v, cplx z) {
    const double r = std::abs(v.sq), d = std::abs(z) - r;
    if (std::abs(d) <= 1e-12 * r) throw BranchBoundaryError("|z| = |q|^(1/2) separates the two branches");
    return d < 0;
}

// Density of the spectral measure on |t| = |q|^(1/2).
PointFn spectral_density(const Values& v) {
    return [v](cplx t) {
        const auto& c = v.ctx;
        return I / (2 * pi * v.sq) * prod(c, {v.sq * t, v.sq / t, v.q, v.a * v.b * v.q}) /
               prod(c, {v.a * v.sq * t, v.b * v.sq / t, v.a * v.q * v.q, v.b});
    };
}

class Pastro final : public Model {
public:
    Pastro(Params p, Values v, RecurrenceSpec s)
        : Model("Pastro21", std::move(p), std::move(s), Coordinate::Plain), v_(std::move(v)) {}

    Measure spectral_measure() const override {
        return {CircleContour{std::abs(v_.sq), spectral_density(v_)}, "|t| = |q|^(1/2)"};
    }

    cplx cf_closed(cplx z) const override {
        const auto& c = v_.ctx;
        if (inside(v_, z))
            return (1.0 - v_.a * v_.q) / (v_.sq * (1.0 - v_.b)) *
                   phi_value(c, {1.0 / v_.a, v_.q}, {v_.q * v_.b}, z * v_.a * v_.sq);
        return phi_value(c, {v_.q / v_.b, v_.q}, {v_.a * v_.q * v_.q}, v_.b * v_.sq / z) / z;
    }

    cplx minimal_closed_form(int n, cplx z) const override {
        return inside(v_, z) ? X_inner(v_, n, z) : X_outer(v_, n, z);
    }

    BiorthFamily biorth() const override {
        require(std::abs(v_.a) < 1.0, name(), "|a| < 1");
        const Values v = v_;
        auto weight = [v](cplx t) {
            const auto& c = v.ctx;
            const cplx f = prod(c, {v.sq * t, v.sq / t, v.q, v.q * v.a * v.b}) /
                           prod(c, {v.a * v.sq * t, v.b * v.sq / t, v.q * v.a, v.q * v.b}) / (2 * pi);
            return f / (I * t);
        };
        BiorthFamily f;
        f.left = [v](int m, cplx t) { return P(v, m, t); };
        f.right = [v](int n, cplx t) { return Q(v, n, 1.0 / t); };
        f.norm = [v](int n) {
            return prod(v.ctx, {v.q, v.a * v.b * v.q}, n) / prod(v.ctx, {v.a * v.q, v.b * v.q}, n);
        };
        f.measure = {CircleContour{1.0, weight}, "|t| = 1"};
        f.validity = "|a q| < 1, |b| < 1, |a| < 1";
        return f;
    }

    std::vector<cplx> interior_points() const override {
        const double r = std::abs(v_.sq);
        return {0.55 * r, cplx(0.15, 0.4) * r, cplx(-0.3, 0.2) * r,
                2.8 * r, cplx(-1.4, 1.4) * r, cplx(0.5, -2.0) * r};
    }

private:
    Values v_;
};

} // namespace

ModelPtr make_pastro(const Params& p) {
    const std::string name = "Pastro21";
    const cplx q = p.at("q"), a = p.at("a"), b = p.at("b");
    require(std::abs(q) < 1.0 && q != 0.0, name, "0 < |q| < 1");
    require(std::abs(a * q) < 1.0, name, "|a q| < 1");
    require(std::abs(b) < 1.0 && b != 0.0, name, "0 < |b| < 1");
    require(a != 0.0, name, "a != 0");
    Values v = values(p);
    auto c = [v](int n) {
        return -v.sq * (1.0 - v.b * std::pow(v.q, n - 1)) / (1.0 - v.a * std::pow(v.q, n));
    };
    auto lam = [v](int n) {
        const cplx qn1 = std::pow(v.q, n - 1), qn = qn1 * v.q;
        return v.sq * (1.0 - qn1) * (1.0 - v.a * v.b * qn1) / ((1.0 - v.a * qn) * (1.0 - v.a * qn1));
    };
    auto spec = RecurrenceSpec::r1(c, lam, [](int) { return cplx(0.0); });
    const cplx c1 = c(1);
    // lambda_1 = 0: the n = 0 denominator is read off the recurrence at n = 1.
    spec.lambda1_limit = [c1](cplx z, cplx x0, cplx x1) { return (z - c1) * x0 - x1; };
    return std::make_shared<Pastro>(p, std::move(v), std::move(spec));
}

} // namespace detail

Sides pastro_transform(const Params& p, int n, int k, cplx z, const QuadratureConfig& cfg) {
    using namespace detail;
    if (k < 0 || k > n) throw DomainError("need 0 <= k <= n");
    const Values v = values(resolve("Pastro21", p));
    const bool in = inside(v, z);
    auto weight = [v](cplx t) {
        return I / (2 * pi) * prod(v.ctx, {v.sq * t, v.sq / t}) / prod(v.ctx, {v.a * v.sq * t, v.b * v.sq / t});
    };
    const Measure m{CircleContour{std::abs(v.sq), weight}, ""};
    Sides s;
    s.lhs = integrate(m, [&](cplx t) { return ipow(t, k - n) * P(v, n, t) / (z - t); }, cfg);
    const auto& c = v.ctx;
    const cplx qn = std::pow(v.q, n + 1);
    if (in) {
        s.rhs = std::pow(z, k) * prod(c, {v.a * qn, v.b * qn}) / prod(c, {qn, v.a * v.b * qn}) *
                phi_value(c, {1.0 / v.a, qn}, {v.b * qn}, v.a * z * v.sq);
    } else {
        s.rhs = std::pow(v.sq, n + 1) * ipow(z, k - n - 1) * prod(c, {v.a * qn, v.a * qn * v.q, v.b}) /
                prod(c, {qn, v.a * v.b * qn, v.a * v.q}) *
                phi_value(c, {v.q / v.b, qn}, {v.a * qn * v.q}, v.b * v.sq / z);
    }
    return s;
}

Sides pastro_moment(const Params& p, int m, const QuadratureConfig& cfg) {
    using namespace detail;
    const Values v = values(resolve("Pastro21", p));
    const Measure meas{CircleContour{std::abs(v.sq), spectral_density(v)}, ""};
    Sides s;
    s.lhs = integrate(meas, [&](cplx t) { return P(v, m, t); }, cfg);
    s.rhs = std::pow(v.sq, m) * prod(v.ctx, {v.q, v.a * v.b * v.q}, m) /
            prod(v.ctx, {v.a * v.q, v.a * v.q * v.q}, m);
    return s;
}

Sides pastro_inverse_moment(const Params& p, int m, const QuadratureConfig& cfg) {
    using namespace detail;
    const Values v = values(resolve("Pastro21", p));
    const Measure meas{CircleContour{std::abs(v.sq), spectral_density(v)}, ""};
    Sides s;
    s.lhs = -integrate(meas, [&](cplx t) { return ipow(t, -m - 1) * P(v, m, t); }, cfg);
    s.rhs = (1.0 - v.a * v.q) / v.sq * prod(v.ctx, {v.a * v.b * v.q, v.q}, m) /
            ((1.0 - v.b) * prod(v.ctx, {v.a * v.q, v.b * v.q}, m));
    return s;
}

} // namespace rfrac
