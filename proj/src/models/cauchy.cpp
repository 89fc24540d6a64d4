#include "common.hpp"
#include "rfrac/identities.hpp"

namespace rfrac {
namespace detail {
namespace {

struct Values {
    cplx a, b;
};

// P_n(x; a, b), the polynomial solution with P_0 = 1.
cplx P(cplx a, cplx b, int n, cplx x) {
    return std::pow(2.0, -n) * shifted_factorial(1.0 - b, n) / shifted_factorial((1.0 + a - b) / 2.0, n) *
           f21_value(-double(n), b - a - double(n), b - double(n), 1.0 - x);
}

cplx U(cplx a, cplx b, int n, cplx x) { return P(a, b, n, x) / std::pow(x - 1.0, n); }

// Gamma(n+1) Gamma(n+1+a-b) / (Gamma(n+1+s) Gamma(n+(1+a-b)/2)) built up from n = 0,
// with s = a for the first solution and s = 1-b for the second.
cplx gamma_ratio(cplx a, cplx b, cplx s, int n) {
    const cplx h = (1.0 + a - b) / 2.0;
    cplx r = gamma_fn(1.0 + a - b) / (gamma_fn(1.0 + s) * gamma_fn(h));
    for (int k = 1; k <= n; ++k) r *= double(k) * (double(k) + a - b) / ((double(k) + s) * (double(k) - 1.0 + h));
    return r;
}

bool left_of_line(cplx z) {
    const double d = z.real() - 0.5;
    if (std::abs(d) <= 1e-12) throw BranchBoundaryError("Re z = 1/2 separates the two branches");
    return d < 0;
}

class Cauchy final : public Model {
public:
    Cauchy(Params p, Values v, RecurrenceSpec s)
        : Model("Cauchy2F1_32", std::move(p), std::move(s), Coordinate::Plain), v_(v) {}

    Measure spectral_measure() const override {
        const cplx a = v_.a, b = v_.b;
        const cplx K = (1.0 + a - b) * gamma_fn(a) * gamma_fn(1.0 - b) / (2 * pi * I * gamma_fn(1.0 + a - b));
        return {VerticalLine{0.5, [=](cplx t) { return K * std::pow(t, -a) * std::pow(1.0 - t, b - 1.0); }},
                "Re t = 1/2"};
    }

    cplx cf_closed(cplx z) const override {
        const cplx a = v_.a, b = v_.b;
        if (left_of_line(z))
            return -(1.0 + a - b) * std::pow(1.0 - z, b - 1.0) / a * gauss_2f1(a, b, 1.0 + a, z);
        return -(1.0 + a - b) / (b - 1.0) * std::pow(z, -a) * gauss_2f1(1.0 - a, 1.0 - b, 2.0 - b, 1.0 - z);
    }

    cplx minimal_closed_form(int n, cplx z) const override {
        const cplx a = v_.a, b = v_.b;
        if (left_of_line(z))
            return std::pow(z / 2.0, n) * gamma_ratio(a, b, a, n) * gauss_2f1(a, b, double(n) + 1.0 + a, z);
        return std::pow((z - 1.0) / 2.0, n) * gamma_ratio(a, b, 1.0 - b, n) *
               gauss_2f1(1.0 - a, 1.0 - b, double(n) + 2.0 - b, 1.0 - z);
    }

    BiorthFamily biorth() const override {
        const cplx a = v_.a, b = v_.b;
        BiorthFamily f;
        f.left = [a, b](int m, cplx x) { return U(-b, -a, m, 1.0 - x); };
        f.right = [a, b](int n, cplx x) { return U(a, b, n, x); };
        f.norm = [a, b](int n) {
            const cplx h = (a - b + 1.0) / 2.0, sf = shifted_factorial(h, n);
            return gamma_fn(1.0 + a - b) * gamma_fn(n + 1.0) * shifted_factorial(1.0 + a - b, n) /
                   (gamma_fn(1.0 + a) * gamma_fn(1.0 - b) * std::pow(2.0, 2 * n) * sf * sf);
        };
        f.measure = {VerticalLine{0.5, [a, b](cplx t) {
                                      return std::pow(t, -a - 1.0) * std::pow(1.0 - t, b - 1.0) / (2 * pi * I);
                                  }},
                     "Re t = 1/2"};
        f.validity = "a, b != 0, a != -1, b != 1, Re(a - b) > 0";
        return f;
    }

    std::vector<cplx> interior_points() const override {
        return {0.2, cplx(-1.0, 1.0), cplx(0.3, -0.8), 2.0, cplx(1.0, 2.0), cplx(0.8, -0.5)};
    }

private:
    Values v_;
};

} // namespace

ModelPtr make_cauchy(const Params& p) {
    const std::string name = "Cauchy2F1_32";
    const cplx a = p.at("a"), b = p.at("b");
    require(a != 0.0 && b != 0.0, name, "a, b != 0");
    require(a != -1.0, name, "a != -1");
    require(b != 1.0, name, "b != 1");
    require((a - b).real() > 0.0, name, "Re(a - b) > 0");
    auto c = [a, b](int n) { return (double(n) + a - 1.0) / (2.0 * n + a - b - 1.0); };
    auto lam = [a, b](int n) {
        return double(n - 1) * (double(n) + a - 1.0 - b) / ((2.0 * n + a - 1.0 - b) * (2.0 * n + a - 3.0 - b));
    };
    auto spec = RecurrenceSpec::r2(c, lam, [](int) { return cplx(0.0); }, [](int) { return cplx(1.0); });
    return std::make_shared<Cauchy>(p, Values{a, b}, std::move(spec));
}

} // namespace detail

Sides cauchy_kappa(const Params& p, const QuadratureConfig& cfg) {
    const auto m = instantiate("Cauchy2F1_32", p);
    const cplx a = m->param("a"), b = m->param("b");
    return {normalization(m->spectral_measure(), cfg), (a - b + 1.0) / (a - b)};
}

} // namespace rfrac
