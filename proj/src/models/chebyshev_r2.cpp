#include "common.hpp"
#include "rfrac/identities.hpp"

namespace rfrac {
namespace detail {
namespace {

struct Values {
    double a, b, sa, sb;
};

Values values(const Params& p) {
    const double a = p.at("a").real(), b = p.at("b").real();
    return {a, b, std::sqrt(a), std::sqrt(b)};
}

RecurrenceSpec make_spec(const Values& v) {
    const double c = -v.sa * v.sb, a = v.a, b = v.b;
    return RecurrenceSpec::r2([c](int) { return cplx(c); }, [](int) { return cplx(0.25); },
                              [a](int) { return cplx(a); }, [b](int) { return cplx(b); });
}

// sqrt(z) on the side that makes (sqrt z - sqrt a)(sqrt z - sqrt b) the smaller root.
cplx root(const Values& v, cplx z) {
    cplx s = std::sqrt(z);
    const cplx base = z + v.sa * v.sb, tilt = (v.sa + v.sb) * s;
    const double lo = std::abs(base - tilt), hi = std::abs(base + tilt);
    if (std::abs(lo - hi) <= 1e-12 * std::max(lo, hi))
        throw BranchBoundaryError("z on (-inf, 0]: both square roots give the same modulus");
    return lo < hi ? s : -s;
}

cplx P(const RecurrenceSpec& spec, int n, cplx z) { return forward(spec, z, n).p(n); }

PointFn half_line_weight(const Values& v, int pa, int pb) {
    return [v, pa, pb](cplx x) {
        return 2.0 / pi * (v.sa + v.sb) * std::sqrt(-x) / (ipow(v.a - x, pa) * ipow(v.b - x, pb));
    };
}

class ChebyshevR2 final : public Model {
public:
    ChebyshevR2(Params p, Values v, RecurrenceSpec s)
        : Model("ChebyshevR2_31", std::move(p), std::move(s), Coordinate::Plain), v_(v) {}

    Measure spectral_measure() const override {
        return {Interval{-std::numeric_limits<double>::infinity(), 0.0, half_line_weight(v_, 1, 1), {}},
                "(-inf, 0]"};
    }

    cplx cf_closed(cplx z) const override {
        const cplx s = root(v_, z);
        return 2.0 / ((s + v_.sa) * (s + v_.sb));
    }

    cplx minimal_closed_form(int n, cplx z) const override {
        const cplx s = root(v_, z);
        return std::pow((s - v_.sa) * (s - v_.sb) / 2.0, n);
    }

    BiorthFamily biorth() const override {
        const Values v = v_;
        const RecurrenceSpec spec = this->spec();
        auto R = [v, spec](int n, cplx x) {
            const int k = n / 2;
            return P(spec, n, x) / (ipow(v.a - x, k) * ipow(v.b - x, n - k));
        };
        BiorthFamily f;
        f.left = R;
        f.right = R;
        f.norm = [v](int n) {
            return std::pow(2.0, -2 * n) / ((n % 2 == 0 ? v.sa : v.sb) * (v.sa + v.sb));
        };
        f.printed_norm = [v](int n) { return cplx(std::pow(2.0, -2 * n) / (v.sa * (v.sa + v.sb))); };
        f.measure = {Interval{-std::numeric_limits<double>::infinity(), 0.0, half_line_weight(v, 2, 1), {}},
                     "(-inf, 0]"};
        f.validity = "a, b > 0";
        return f;
    }

    std::vector<cplx> interior_points() const override {
        return {9.0, cplx(-1.0, 1.0), cplx(2.0, -3.0), 0.5};
    }

private:
    Values v_;
};

} // namespace

ModelPtr make_chebyshev_r2(const Params& p) {
    const std::string name = "ChebyshevR2_31";
    for (const char* k : {"a", "b"}) {
        const cplx x = p.at(k);
        require(x.imag() == 0.0 && x.real() > 0.0, name, std::string(k) + " real and > 0");
    }
    const Values v = values(p);
    return std::make_shared<ChebyshevR2>(p, v, make_spec(v));
}

} // namespace detail

Sides chebyshev_polynomial_gram(const Params& p, int m, int n, const QuadratureConfig& cfg) {
    using namespace detail;
    if (m < 0 || n < 0) throw DomainError("negative index");
    if (m > n) throw DomainError("the weight with (a-x)^{-n-1}(b-x)^{-n-1} only integrates P_m P_n for m <= n");
    const Values v = values(resolve("ChebyshevR2_31", p));
    const auto spec = make_spec(v);
    const Measure meas{Interval{-std::numeric_limits<double>::infinity(), 0.0,
                                half_line_weight(v, n + 1, n + 1), {}},
                       ""};
    Sides s;
    s.lhs = integrate(meas, [&](cplx x) { return P(spec, m, x) * P(spec, n, x); }, cfg);
    s.rhs = m == n ? std::pow(2.0, -2 * n + 1) * (n + 1) : 0.0;
    return s;
}

Sides chebyshev_cf(const Params& p, cplx z, const QuadratureConfig& cfg) {
    const auto m = instantiate("ChebyshevR2_31", p);
    return {stieltjes(m->spectral_measure(), z, cfg), m->cf_closed(z)};
}

} // namespace rfrac
