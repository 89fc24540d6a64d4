#include "common.hpp"
#include "rfrac/identities.hpp"

namespace rfrac {
namespace detail {
namespace {

// Askey-Wilson parameters in the sinh coordinate: alpha, beta = -qE/s34, gamma = q/(E s34), delta.
struct Values {
    QContext ctx;
    cplx q, t1, t2, t3, t4, T, s34, u, X, al, de, bg, S;

    cplx pw(int e) const { return ipow(q, e); }
};

Values values(const Params& p) {
    const cplx q = p.at("q"), t1 = p.at("t1"), t2 = p.at("t2"), t3 = p.at("t3"), t4 = p.at("t4");
    const cplx s34 = std::sqrt(t3 * t4), u = -std::sqrt(t3 / t4);
    const cplx al = s34 * t1 / q, de = t2 * s34 / (q * q), bg = -q * q / (t3 * t4);
    return {QContext(q), q, t1, t2, t3, t4, t1 * t2 * t3 * t4, s34, u, (u + 1.0 / u) / 2.0,
            al, de, bg, al * bg * de};
}

// A_n = A0 + A1 z and B_n = B0 + B1 z.
std::pair<cplx, cplx> A01(const Values& v, int n) {
    const cplx K = (1.0 - v.S * v.pw(n - 1)) * (1.0 - v.al * v.de * v.pw(n)) /
                   (2.0 * v.al * (1.0 - v.S * v.pw(2 * n - 1)) * (1.0 - v.S * v.pw(2 * n)));
    return {K * (1.0 + v.al * v.al * v.bg * v.pw(2 * n)), K * v.al * v.pw(n) * 2.0 * v.q / v.s34};
}

std::pair<cplx, cplx> B01(const Values& v, int n) {
    const cplx K = v.al * (1.0 - v.pw(n)) * (1.0 - v.bg * v.pw(n - 1)) /
                   (2.0 * (1.0 - v.S * v.pw(2 * n - 2)) * (1.0 - v.S * v.pw(2 * n - 1)));
    return {K * (1.0 + v.de * v.de * v.bg * v.pw(2 * n - 2)), K * v.de * v.pw(n - 1) * 2.0 * v.q / v.s34};
}

cplx U(const Values& v, int m) { return A01(v, m - 1).second + B01(v, m - 1).second; }

cplx C(const Values& v, int m) {
    const int n = m - 1;
    return -(v.X - (v.al + 1.0 / v.al) / 2.0 + A01(v, n).first + B01(v, n).first) / U(v, m);
}

cplx LAM(const Values& v, int m) {
    const int n = m - 1;
    return A01(v, n - 1).second * B01(v, n).second / (U(v, n) * U(v, m));
}

// Zeros of A_{m-2} and B_{m-1}; the common factor K cancels, which keeps b_1 finite where B_0 = 0.
cplx node_a(const Values& v, int m) {
    const int n = m - 2;
    return -(1.0 + v.al * v.al * v.bg * v.pw(2 * n)) * v.s34 / (v.al * v.pw(n) * 2.0 * v.q);
}

cplx node_b(const Values& v, int m) {
    const int n = m - 1;
    return -(1.0 + v.de * v.de * v.bg * v.pw(2 * n - 2)) * v.s34 / (v.de * v.pw(n - 1) * 2.0 * v.q);
}

cplx printed_u(const Values& v, int m) {
    const int n = m - 1;
    const cplx q = v.q, t12 = v.t1 * v.t2, q4 = q * q * q * q;
    return ((1.0 - t12 * v.pw(2 * n - 2)) * (q4 + v.T) + v.pw(n) * (1.0 + q) * t12 * (q - v.t3 * v.t4)) *
           v.pw(n - 3) / v.s34 / ((1.0 + t12 * v.pw(2 * n - 3)) * (1.0 + t12 * v.pw(2 * n - 1)));
}

cplx printed_v(const Values& v, int m) {
    const int n = m - 1;
    const cplx q = v.q, t12 = v.t1 * v.t2, q4 = q * q * q * q;
    return -((1.0 - t12 * v.pw(2 * n - 1)) * (v.t3 * v.t4 - q * q) + v.pw(n - 3) * (1.0 + q) * (v.T + q4)) *
           v.pw(n - 1) * (v.t1 + v.t2 / q) /
           (2.0 * v.s34 * (1.0 + t12 * v.pw(2 * n - 3)) * (1.0 + t12 * v.pw(2 * n - 1)));
}

cplx printed_lambda(const Values& v, int m) {
    const int n = m - 1;
    const cplx t12 = v.t1 * v.t2;
    return t12 * v.pw(2 * n - 3) * (1.0 - v.pw(n)) * (1.0 + t12 * v.pw(n - 3)) *
           (1.0 + v.pw(n + 1) / (v.t3 * v.t4)) * (1.0 - v.T * v.pw(n - 4)) /
           ((1.0 + t12 * v.pw(2 * n - 2)) * std::pow(1.0 + t12 * v.pw(2 * n - 3), 2) *
            (1.0 + t12 * v.pw(2 * n - 4)) * printed_u(v, n) * printed_u(v, m));
}

cplx printed_a(const Values& v, int m) {
    const int n = m - 1;
    return (v.t2 * v.pw(n - 2) - v.pw(2 - n) / v.t2) / 2.0;
}

cplx printed_b(const Values& v, int m) {
    const int n = m - 1;
    return (v.t1 * v.pw(n - 1) - v.pw(-n - 1) / v.t1) / 2.0;
}

// Askey-Wilson minimal solution at E, before dividing by prod U_k.
cplx F_n(const Values& v, int n, cplx E) {
    const auto& c = v.ctx;
    const cplx q = v.q, u = v.u;
    const cplx al = v.al, be = -q * E / v.s34, ga = q / (E * v.s34), de = v.de, S = v.S;
    const cplx qn1 = v.pw(n + 1), qn = v.pw(n);
    return ipow(2.0 * u, -n) *
           prod(c, {S * v.pw(2 * n - 1), al * qn1 / u, be * qn1 / u, ga * qn1 / u, de * qn1 / u}) /
           prod(c, {qn1, v.pw(n + 2) / (u * u), al * be * qn, al * ga * qn, al * de * qn, be * ga * qn,
                    be * de * qn, ga * de * qn}) *
           w87(c, qn1 / (u * u), qn1, q / (al * u), q / (be * u), q / (ga * u), q / (de * u), S * v.pw(n - 1))
               .value;
}

cplx mass(const Values& v, int k) {
    const auto& c = v.ctx;
    const cplx q = v.q, t1 = v.t1, t2 = v.t2, t3 = v.t3, t4 = v.t4;
    const cplx qq = q * q;
    return U(v, 1) * v.s34 / ipow(q, 4 * k + 1) *
           prod(c, {v.T / (qq * q), q * t1 / t3, t2 / t3, q * t4 / t3}) /
           prod(c, {-t1 * t2 / q, -t1 * t4 / q, -t2 * t4 / qq, -qq / (t3 * t3)}) *
           prod(c, {-qq / (t1 * t3), -qq * q / (t2 * t3), -qq / (t3 * t4), -qq / (t3 * t3)}, k) /
           prod(c, {q * t1 / t3, t2 / t3, q * t4 / t3, q}, k) * (1.0 + ipow(q, 2 * k + 2) / (t3 * t3)) *
           std::pow(v.T, k);
}

cplx node(const Values& v, int k) { return (v.t3 * ipow(v.q, -k - 1) - ipow(v.q, k + 1) / v.t3) / 2.0; }

constexpr int kMassTerms = 80;

cplx total_mass(const Values& v) {
    cplx s = 0.0;
    for (int k = 0; k < kMassTerms; ++k) s += mass(v, k);
    return s;
}

// R_n(E; t1, t2); the partner family swaps t1 and t2.
cplx R(const Values& v, int n, cplx E, cplx t1, cplx t2) {
    const cplx q = v.q;
    return phi_value(v.ctx, {ipow(q, -n), -t1 * t2 * ipow(q, n - 2), -t1 * v.t3 / q, -t1 * v.t4 / q},
                     {-t1 * E, t1 / E, v.T / (q * q * q)}, q);
}

cplx E_of(cplx z) { return z + std::sqrt(z * z + 1.0); }

class SinhLattice final : public Model {
public:
    SinhLattice(Params p, Values v, RecurrenceSpec s)
        : Model("SinhLattice42", std::move(p), std::move(s), Coordinate::Sinh), v_(std::move(v)) {}

    Measure spectral_measure() const override {
        const Values v = v_;
        return {Discrete{[v](int k) { return MassPoint{node(v, k), mass(v, k)}; }, -1},
                "z_k = (t3 q^{-k-1} - q^{k+1}/t3)/2"};
    }

    cplx cf_closed(cplx z) const override { return sinh_value(v_, z); }

    cplx minimal_closed_form(int n, cplx z) const override {
        cplx r = F_n(v_, n, E_of(z));
        for (int k = 1; k <= n; ++k) r /= U(v_, k);
        return r;
    }

    BiorthFamily biorth() const override {
        const Values v = v_;
        BiorthFamily f;
        f.left = [v](int m, cplx z) { return R(v, m, E_of(z), v.t1, v.t2); };
        f.right = [v](int n, cplx z) { return R(v, n, E_of(z), v.t2, v.t1); };
        f.norm = [v](int n) {
            const auto& c = v.ctx;
            const cplx q = v.q, q3 = q * q * q, t12 = v.t1 * v.t2;
            return std::pow(v.T / q3, n) * (1.0 + t12 / (q * q)) / (1.0 + t12 * ipow(q, 2 * n - 2)) *
                   prod(c, {-q * q / (v.t3 * v.t4), q}, n) / prod(c, {-t12 / (q * q), v.T / q3}, n) *
                   prod(c, {-t12 / q, -v.t1 * v.t4 / q, -v.t2 * v.t4 / q, -q3 / (v.t3 * v.t3)}) /
                   prod(c, {q * v.t1 / v.t3, q * v.t2 / v.t3, q * v.t4 / v.t3, v.T / q3});
        };
        auto weight = [v](int k) {
            const auto& c = v.ctx;
            const cplx q = v.q, qq = q * q, t3 = v.t3;
            const cplx w = prod(c, {-qq / (v.t1 * t3), -qq / (v.t2 * t3), -qq / (t3 * v.t4), -qq / (t3 * t3)}, k) /
                           prod(c, {q * v.t4 / t3, q * v.t1 / t3, q * v.t2 / t3, q}, k) *
                           (1.0 + ipow(q, 2 * k + 2) / (t3 * t3)) / (1.0 + qq / (t3 * t3)) *
                           std::pow(v.T / (qq * q), k);
            return MassPoint{node(v, k), w};
        };
        f.measure = {Discrete{weight, -1}, "z_k = (t3 q^{-k-1} - q^{k+1}/t3)/2"};
        f.validity = "|t1 t2 t3 t4| < |q|^3";
        return f;
    }

    std::vector<cplx> interior_points() const override {
        return {cplx(0.5, 1.0), cplx(-2.0, 0.3), cplx(3.0, -1.0), cplx(0.2, 0.1)};
    }

    std::optional<RecurrenceSpec> printed_spec() const override {
        const Values v = v_;
        return RecurrenceSpec::r2([v](int n) { return (-printed_v(v, n) - v.X) / printed_u(v, n); },
                                  [v](int n) { return printed_lambda(v, n); },
                                  [v](int n) { return printed_a(v, n); }, [v](int n) { return printed_b(v, n); });
    }

    static cplx sinh_value(const Values& v, cplx z) {
        const cplx q = v.q, t1 = v.t1, t2 = v.t2, t3 = v.t3, t4 = v.t4, E = E_of(z);
        const cplx a8 = q * t4 / t3, b8 = q, c8 = -q * q / (t1 * t3), f8 = -q * q * q / (t2 * t3);
        const auto& c = v.ctx;
        const cplx cinf = prod(c, {a8 * q, a8 * q / (b8 * c8), a8 * q / (b8 * f8), a8 * q / (c8 * f8)}) /
                          prod(c, {a8 * q / b8, a8 * q / c8, a8 * q / f8, a8 * q / (b8 * c8 * f8)});
        const cplx K = -(2.0 * q / t3) * total_mass(v) / cinf;
        const cplx core = w87(c, a8, b8, c8, t4 / E, -t4 * E, f8, -t1 * t2 / (q * q)).value;
        return K * core / ((1.0 - q * E / t3) * (1.0 + q / (E * t3)));
    }

private:
    Values v_;
};

// The z = cosh(xi) family: the sinh family at (i t3, -i t4) seen through z = i w. Nodes become
// (t3 q^{-k-1} + q^{k+1}/t3)/2, masses and norms are unchanged, and X_n picks up i^{-n}.
class CoshLattice final : public Model {
public:
    CoshLattice(Params p, ModelPtr base)
        : Model("SinhLattice42", std::move(p), rotate(base->spec()), Coordinate::Plain), base_(std::move(base)) {}

    Measure spectral_measure() const override {
        return {turn(std::get<Discrete>(base_->spectral_measure().shape)), "z_k = (t3 q^{-k-1} + q^{k+1}/t3)/2"};
    }

    cplx cf_closed(cplx w) const override { return I * base_->cf_closed(I * w); }

    cplx minimal_closed_form(int n, cplx w) const override {
        return ipow(I, -n) * base_->minimal_closed_form(n, I * w);
    }

    BiorthFamily biorth() const override {
        BiorthFamily f = base_->biorth();
        f.left = [g = f.left](int m, cplx w) { return g(m, I * w); };
        f.right = [g = f.right](int n, cplx w) { return g(n, I * w); };
        f.measure = {turn(std::get<Discrete>(f.measure.shape)), "z_k = (t3 q^{-k-1} + q^{k+1}/t3)/2"};
        return f;
    }

    std::vector<cplx> interior_points() const override {
        auto pts = base_->interior_points();
        for (cplx& z : pts) z *= -I;
        return pts;
    }

    std::optional<RecurrenceSpec> printed_spec() const override {
        if (auto s = base_->printed_spec()) return rotate(*s);
        return std::nullopt;
    }

private:
    static RecurrenceSpec rotate(const RecurrenceSpec& s) {
        return RecurrenceSpec::r2([c = s.c](int n) { return -I * c(n); }, s.lambda,
                                  [a = s.a](int n) { return -I * a(n); }, [b = s.b](int n) { return -I * b(n); });
    }

    static Discrete turn(Discrete d) {
        return {[at = d.at](int k) {
                    MassPoint p = at(k);
                    p.z *= -I;
                    return p;
                },
                d.count};
    }

    ModelPtr base_;
};

bool cosh_flag(const Params& p) {
    const auto it = p.find("cosh");
    if (it == p.end() || it->second == 0.0) return false;
    if (it->second != 1.0) throw DomainError("SinhLattice42: parameter domain violated, need cosh = 0 or 1");
    return true;
}

// Parameters of the underlying sinh family.
Params sinh_params(Params p) {
    if (cosh_flag(p)) {
        p["t3"] *= I;
        p["t4"] *= -I;
    }
    p.erase("cosh");
    return p;
}

} // namespace

ModelPtr make_sinh_lattice(const Params& p) {
    const std::string name = "SinhLattice42";
    const cplx q = p.at("q");
    require(std::abs(q) < 1.0 && q != 0.0, name, "0 < |q| < 1");
    for (const char* k : {"t1", "t2", "t3", "t4"}) require(p.at(k) != 0.0, name, std::string(k) + " != 0");
    require(std::abs(p.at("t1") * p.at("t2") * p.at("t3") * p.at("t4")) < std::pow(std::abs(q), 3), name,
            "|t1 t2 t3 t4| < |q|^3");
    const Params base = sinh_params(p);
    Values v = values(base);
    auto spec = RecurrenceSpec::r2([v](int n) { return C(v, n); }, [v](int n) { return LAM(v, n); },
                                   [v](int n) { return node_a(v, n); }, [v](int n) { return node_b(v, n); });
    if (!cosh_flag(p)) return std::make_shared<SinhLattice>(p, std::move(v), std::move(spec));
    return std::make_shared<CoshLattice>(p, std::make_shared<SinhLattice>(base, std::move(v), std::move(spec)));
}

} // namespace detail

cplx sinh_transform(const Params& p, cplx z) {
    const auto full = detail::resolve("SinhLattice42", p);
    const auto v = detail::values(detail::sinh_params(full));
    if (detail::cosh_flag(full)) return detail::I * detail::SinhLattice::sinh_value(v, detail::I * z);
    return detail::SinhLattice::sinh_value(v, z);
}

cplx sinh_transform_printed(const Params& p, cplx z) {
    using namespace detail;
    const auto full = resolve("SinhLattice42", p);
    if (cosh_flag(full)) throw DomainError("the displayed transform belongs to the sinh family (cosh = 0)");
    const Values v = values(full);
    const cplx q = v.q, t1 = v.t1, t2 = v.t2, t3 = v.t3, t4 = v.t4, E = E_of(z), qq = q * q;
    const auto& c = v.ctx;
    const cplx a = q * t4 / t3, b = q, cc = -qq / (t1 * t3), d = t4 / E, e = -t4 * E, f = -qq * q / (t2 * t3);
    const cplx Wt = prod(c, {b, cc, d, e, f}) * w87(c, a, b, cc, d, e, f, t1 * t2 / qq).value;
    return -2.0 * U(v, 1) / std::sqrt(t3 / t4) * (1.0 - q * t4 / t3) * (1.0 + t1 * t2 / qq) /
           prod(c, {q * t4 / t3, -t1 * t4 / q, q * E / t3, -q / (E * t3), -t2 * t4 / qq}) * Wt;
}

} // namespace rfrac
