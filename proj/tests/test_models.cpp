#include <numbers>
#include <random>
#include <string>

#include "doctest.h"
#include "oracle.hpp"
#include "rfrac/errors.hpp"
#include "rfrac/favard.hpp"
#include "rfrac/identities.hpp"
#include "rfrac/models.hpp"

using namespace rfrac;

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

struct GramErrors {
    double off = 0.0;   // largest |G(i, j)|, i != j
    double diag = 0.0;  // largest relative error of G(n, n) against the norm
};

GramErrors gram_errors(const BiorthFamily& f, int N, const std::function<cplx(int)>& norm) {
    const auto G = weighted_gram(f.measure, f.left, f.right, N);
    GramErrors e;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j)
                e.diag = std::max(e.diag, rel(G(i, i), norm(i)));
            else
                e.off = std::max(e.off, std::abs(G(i, j)));
        }
    return e;
}

std::vector<ModelPtr> all_models() {
    std::vector<ModelPtr> out;
    for (const auto& info : model_catalog()) out.push_back(instantiate(info.name, {}));
    out.push_back(instantiate("SinhLattice42", {{"cosh", 1.0}}));
    return out;
}

// S_n of the recurrence: P_n over the interpolation factors 2..n+1.
cplx s_n(const RecurrenceSpec& s, int n, cplx x) {
    cplx p = forward(s, x, n).p(n);
    for (int j = 2; j <= n + 1; ++j) p /= s.factor(j, x);
    return p;
}

} // namespace

TEST_CASE("catalog lists the seven models") {
    const auto& cat = model_catalog();
    REQUIRE(cat.size() == 7);
    const std::vector<std::string> names{"Pastro21",      "ChebyshevR2_31",  "Cauchy2F1_32", "UnitCircle41",
                                         "SinhLattice42", "ChebyRational51", "Rahman52"};
    for (std::size_t i = 0; i < names.size(); ++i) {
        CHECK(cat[i].name == names[i]);
        CHECK_FALSE(cat[i].domain.empty());
        const auto m = instantiate(names[i], {});
        CHECK(m->name() == names[i]);
        CHECK(m->params().size() == cat[i].defaults.size());
    }
}

TEST_CASE("instantiate errors") {
    CHECK_THROWS_AS(instantiate("Nope", {}), ParseError);
    CHECK_THROWS_AS(instantiate("Pastro21", {{"zz", 1.0}}), ParseError);
    try {
        instantiate("Pastro21", {{"q", 1.5}});
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("|q| < 1") != std::string::npos);
    }
    CHECK_THROWS_AS(instantiate("ChebyshevR2_31", {{"a", -1.0}}), DomainError);
    CHECK_THROWS_AS(instantiate("ChebyshevR2_31", {{"b", cplx(4.0, 1.0)}}), DomainError);
    CHECK_THROWS_AS(instantiate("Cauchy2F1_32", {{"b", 1.0}}), DomainError);
    CHECK_THROWS_AS(instantiate("Cauchy2F1_32", {{"a", -1.0}, {"b", -3.0}}), DomainError);
    CHECK_THROWS_AS(instantiate("Cauchy2F1_32", {{"a", 0.5}, {"b", 0.7}}), DomainError);
    CHECK_THROWS_AS(instantiate("UnitCircle41", {{"t1", 0.8}}), DomainError);
    CHECK_THROWS_AS(instantiate("UnitCircle41", {{"a", 1.2}}), DomainError);
    CHECK_THROWS_AS(instantiate("SinhLattice42", {{"t1", 2.0}, {"t2", 2.0}}), DomainError);
    CHECK_THROWS_AS(instantiate("SinhLattice42", {{"t4", 0.0}}), DomainError);
    CHECK_THROWS_AS(instantiate("SinhLattice42", {{"cosh", 2.0}}), DomainError);
    CHECK_THROWS_AS(instantiate("ChebyRational51", {{"alpha", 1.0}}), DomainError);
    CHECK_THROWS_AS(instantiate("Rahman52", {{"beta", 0.0}}), DomainError);
    CHECK_THROWS_AS(instantiate("Rahman52", {{"delta", cplx(0.0, -1.1)}}), DomainError);
}

TEST_CASE("Pastro21 first coefficient") {
    const auto m = instantiate("Pastro21", {{"q", 0.5}, {"a", 0.2}, {"b", 0.3}});
    const double expect = -std::sqrt(0.5) * 0.7 / 0.9;
    CHECK(std::abs(m->spec().c(1) - expect) < 1e-15);
    CHECK(m->spec().kind == FractionKind::RI);
}

TEST_CASE("ChebyshevR2_31 coefficients and minimal solution") {
    const auto m = instantiate("ChebyshevR2_31", {{"a", 1.0}, {"b", 4.0}});
    for (int n = 1; n < 6; ++n) {
        CHECK(m->spec().c(n) == cplx(-2.0));
        CHECK(m->spec().lambda(n) == cplx(0.25));
    }
    CHECK(std::abs(m->minimal_closed_form(3, 9.0) - 1.0) < 1e-14);
    CHECK(std::abs(m->cf_closed(1.0) - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("ChebyshevR2_31 polynomials match the square-root closed form") {
    const double a = 2.0, b = 5.0, sa = std::sqrt(a), sb = std::sqrt(b);
    const auto m = instantiate("ChebyshevR2_31", {{"a", a}, {"b", b}});
    for (cplx x : {cplx(-3.0), cplx(0.7, 0.2), cplx(6.0, -1.0)}) {
        const cplx s = std::sqrt(x), plus = (s + sa) * (s + sb), minus = (s - sa) * (s - sb);
        for (int n = 0; n <= 6; ++n) {
            const cplx closed = (std::pow(plus, n + 1) - std::pow(minus, n + 1)) /
                                (std::pow(2.0, n + 1) * (sa + sb) * s);
            CHECK(rel(forward(m->spec(), x, n).p(n), closed) < 1e-12);
        }
    }
}

TEST_CASE("ChebyRational51 at alpha = delta = 0") {
    const auto m = instantiate("ChebyRational51", {{"alpha", 0.0}, {"delta", 0.0}});
    const auto f = m->biorth();
    CHECK(f.norm(0) == cplx(1.0));
    const auto& iv = std::get<Interval>(f.measure.shape);
    CHECK(std::abs(iv.smooth(0.3) - 2.0 / pi) < 1e-15);
    CHECK(rel(normalization(f.measure), 1.0) < 1e-12);
    CHECK_THROWS_AS(m->spec().a(1), DomainError);
}

TEST_CASE("Pastro21 minimal solution at the origin") {
    const double q = 0.5, a = 0.3, b = 0.4;
    const auto m = instantiate("Pastro21", {{"q", q}, {"a", a}, {"b", b}});
    using oracle::lc;
    const lc lq = q, la = a, lb = b;
    const auto expect = oracle::narrow(oracle::qpoch_list_inf({la * lq, lb * lq}, lq) /
                                       oracle::qpoch_list_inf({lq, la * lb * lq}, lq));
    CHECK(rel(m->minimal_closed_form(0, 0.0), expect) < 1e-13);
}

TEST_CASE("Pastro21 right family starts at one") {
    const auto f = instantiate("Pastro21", {})->biorth();
    for (cplx t : {cplx(1.0), I, cplx(-0.6, 0.8)}) {
        CHECK(f.right(0, t) == cplx(1.0));
        CHECK(f.left(0, t) == cplx(1.0));
    }
}

TEST_CASE("UnitCircle41 right family is the swapped left family at 1/t") {
    const Params p{{"q", 0.5}, {"a", 0.3}, {"b", 0.2}, {"t1", 0.25}, {"t2", 0.4}};
    const Params swapped{{"q", 0.5}, {"a", 0.2}, {"b", 0.3}, {"t1", 0.4}, {"t2", 0.25}};
    const auto f = instantiate("UnitCircle41", p)->biorth();
    const auto g = instantiate("UnitCircle41", swapped)->biorth();
    for (int n = 0; n <= 4; ++n)
        for (cplx t : {cplx(0.6, 0.8), cplx(-1.0), cplx(0.28, -0.96)})
            CHECK(rel(f.right(n, t), g.left(n, 1.0 / t)) < 1e-13);
}

TEST_CASE("Rahman52 left family equals its coefficient sum") {
    using oracle::lc;
    const lc q = 0.5L, al = 0.2L, be = 0.3L, de = 0.1L, S = al * be * be * de;
    const auto f = instantiate("Rahman52", {})->biorth();
    for (double x : {-0.7, 0.1, 0.9}) {
        const lc e(x, std::sqrt(1.0L - x * x));
        for (int n = 0; n <= 4; ++n) {
            lc sum = 0;
            long double largest = 0;
            for (int j = 0; j <= n; ++j) {
                const lc b = (1.0L - al * al * be * std::pow(q, 2.0L * j)) *
                             oracle::qpoch(S * std::pow(q, static_cast<long double>(n - 1)), q, j) /
                             ((1.0L - al * al * be) * oracle::qpoch(al * de, q, j));
                const lc term = oracle::qpoch_list({std::pow(q, -static_cast<long double>(n)), al * e, al / e}, q, j) /
                                oracle::qpoch_list({q, q * al * be * e, q * al * be / e}, q, j) *
                                std::pow(q, static_cast<long double>(j)) * b;
                sum += term;
                largest = std::max(largest, std::abs(term));
            }
            // The alternating sum cancels; double precision is owed relative to its largest term.
            CHECK(std::abs(f.left(n, x) - oracle::narrow(sum)) < 1e-14 * static_cast<double>(largest));
        }
    }
}

TEST_CASE("Cauchy2F1_32 rational family against a direct 2F1 sum") {
    const double a = 1.5, b = -0.5;
    const auto f = instantiate("Cauchy2F1_32", {{"a", a}, {"b", b}})->biorth();
    using oracle::lc;
    for (cplx x : {cplx(0.5, 2.0), cplx(0.5, -0.3)}) {
        for (int n = 0; n <= 4; ++n) {
            const lc h = (1.0L + a - b) / 2.0L;
            const lc P = std::pow(2.0L, -n) * oracle::rising(1.0L - b, n) / oracle::rising(h, n) *
                         oracle::f21(-static_cast<long double>(n), b - a - n, b - n, 1.0L - oracle::widen(x), n + 1);
            CHECK(rel(f.right(n, x), oracle::narrow(P / std::pow(oracle::widen(x) - 1.0L, n))) < 1e-12);
        }
    }
}

TEST_CASE("branch boundaries") {
    const double sq = std::sqrt(0.5);
    CHECK_THROWS_AS(instantiate("Pastro21", {})->cf_closed(sq * I), BranchBoundaryError);
    CHECK_THROWS_AS(instantiate("Pastro21", {})->minimal_closed_form(2, -sq), BranchBoundaryError);
    CHECK_THROWS_AS(instantiate("UnitCircle41", {})->cf_closed(cplx(0.0, -sq)), BranchBoundaryError);
    CHECK_THROWS_AS(instantiate("Cauchy2F1_32", {})->cf_closed(cplx(0.5, 3.0)), BranchBoundaryError);
    CHECK_THROWS_AS(instantiate("ChebyshevR2_31", {})->cf_closed(-2.0), BranchBoundaryError);
    CHECK_THROWS_AS(instantiate("Rahman52", {})->cf_closed(0.4), BranchBoundaryError);
    CHECK_THROWS_AS(instantiate("ChebyRational51", {})->minimal_closed_form(1, -0.9), BranchBoundaryError);
}

TEST_CASE("property: closed-form minimal solutions satisfy the recurrence") {
    for (const auto& m : all_models()) {
        CAPTURE(m->name());
        const auto r = check_consistency(*m, m->spec(), m->interior_points(), 20, 1e-10);
        CHECK(r.consistent);
        CHECK(r.first_failure == -1);
        CHECK(r.max_defect < 1e-10);
    }
}

TEST_CASE("property: backward recurrence agrees with the closed forms") {
    for (const auto& m : all_models()) {
        CAPTURE(m->name());
        for (cplx z : m->interior_points()) {
            CAPTURE(z);
            const auto est = minimal_solution_backward(m->spec(), z, 3, 60);
            REQUIRE(est.valid);
            CHECK(rel(est.ratio_at_0, m->cf_closed(z)) < 1e-8);
            const cplx x0 = m->minimal_closed_form(0, z);
            for (int n = 1; n <= 3; ++n)
                CHECK(rel(est.values[static_cast<std::size_t>(n)], m->minimal_closed_form(n, z) / x0) < 1e-8);
        }
    }
}

TEST_CASE("property: convergents approach the closed-form fraction") {
    for (const auto& m : all_models()) {
        CAPTURE(m->name());
        for (cplx z : m->interior_points()) {
            CAPTURE(z);
            const auto cv = convergents(m->spec(), z, 200);
            CHECK(rel(cv.values.back(), m->cf_closed(z)) < 1e-8);
        }
    }
}

TEST_CASE("property: Stieltjes transform of the spectral measure is the fraction") {
    for (const auto& m : all_models()) {
        CAPTURE(m->name());
        for (cplx z : m->interior_points()) CHECK(rel(stieltjes(m->spectral_measure(), z), m->cf_closed(z)) < 1e-10);
    }
}

TEST_CASE("property: displayed coefficient variants are flagged") {
    for (const char* name : {"UnitCircle41", "SinhLattice42"}) {
        CAPTURE(name);
        const auto m = instantiate(name, {});
        const auto printed = m->printed_spec();
        REQUIRE(printed.has_value());
        const auto r = check_consistency(*m, *printed, m->interior_points(), 20, 1e-10);
        CHECK_FALSE(r.consistent);
        CHECK(r.first_failure >= 1);
        CHECK(r.first_failure <= 20);
    }
    for (const char* name : {"Pastro21", "ChebyshevR2_31", "Cauchy2F1_32", "ChebyRational51", "Rahman52"})
        CHECK_FALSE(instantiate(name, {})->printed_spec().has_value());
}

TEST_CASE("property: biorthogonality against the closed-form norms") {
    struct Case {
        const char* name;
        Params p;
        int N;
        double off, diag;
    };
    const std::vector<Case> cases{
        {"Pastro21", {{"q", 0.5}, {"a", 0.3}, {"b", 0.4}}, 5, 1e-10, 1e-10},
        {"ChebyshevR2_31", {{"a", 1.0}, {"b", 4.0}}, 6, 1e-10, 1e-10},
        {"Cauchy2F1_32", {{"a", 1.5}, {"b", -0.5}}, 5, 1e-9, 1e-9},
        {"UnitCircle41", {{"q", 0.5}, {"a", 0.3}, {"b", 0.2}, {"t1", 0.3}, {"t2", 0.3}}, 4, 1e-10, 1e-10},
        {"SinhLattice42", {}, 4, 1e-10, 1e-10},
        {"SinhLattice42", {{"cosh", 1.0}}, 4, 1e-10, 1e-10},
        {"ChebyRational51", {{"q", 0.5}, {"alpha", 0.3}, {"delta", 0.2}}, 5, 1e-10, 1e-10},
        {"Rahman52", {}, 4, 1e-10, 1e-10},
        {"Rahman52", {{"q", 0.3}, {"alpha", cplx(0.1, 0.2)}, {"beta", 0.5}, {"delta", -0.4}}, 4, 1e-10, 1e-10},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        const auto f = instantiate(c.name, c.p)->biorth();
        for (int n = 0; n < c.N; ++n) CHECK(f.norm(n) != cplx(0.0));
        const auto e = gram_errors(f, c.N, f.norm);
        CHECK(e.off < c.off);
        CHECK(e.diag < c.diag);
    }
}

TEST_CASE("displayed norms that disagree with quadrature") {
    // The single-root display is right for even n only.
    const auto cheb = instantiate("ChebyshevR2_31", {{"a", 1.0}, {"b", 4.0}})->biorth();
    for (int n = 0; n <= 5; ++n) {
        const cplx ratio = cheb.printed_norm(n) / cheb.norm(n);
        CHECK(std::abs(ratio - (n % 2 ? 2.0 : 1.0)) < 1e-15);
    }
    // Rahman52: the displayed factor swaps the roles of alpha and beta in alpha beta^2 delta.
    const double q = 0.5, al = 0.2, be = 0.3, de = 0.1, S = al * be * be * de, X = al * al * be * de;
    const auto rah = instantiate("Rahman52", {})->biorth();
    CHECK(rah.printed_norm(0) == rah.norm(0));
    for (int n = 1; n <= 3; ++n) {
        const double expect = (1 - X * std::pow(q, 2 * n - 1)) * (1 - S * std::pow(q, 2 * n - 1)) /
                              ((1 - X * std::pow(q, n - 1)) * (1 - S * std::pow(q, n - 1)));
        CHECK(rel(rah.printed_norm(n) / rah.norm(n), expect) < 1e-13);
    }
    const auto e = gram_errors(rah, 4, rah.printed_norm);
    CHECK(e.diag > 1e-4);
}

TEST_CASE("property: Favard functional matches the spectral measure") {
    for (const auto& m : all_models()) {
        CAPTURE(m->name());
        const auto fn = m->functional(8);
        const auto mu = m->spectral_measure();
        CHECK(rel(fn.N0(), normalization(mu)) < 1e-10);
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= n; ++k) {
                const cplx quad = integrate(mu, [&](cplx x) { return std::pow(x, k) * s_n(m->spec(), n, x); });
                const cplx l = functional_apply(fn, XkSn{k, n});
                CHECK(std::abs(quad - l) <= 1e-7 * std::max(1.0, std::abs(l)));
            }
    }
}

TEST_CASE("property: unit circle weight symmetry") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-1.0, 1.0), ang(0.0, 2 * pi), rad(0.8, 1.25);
    for (int it = 0; it < 100; ++it) {
        const cplx a(0.6 * u(rng), 0.2 * u(rng)), b(0.6 * u(rng), 0.2 * u(rng));
        const cplx t1(0.5 * u(rng), 0.1 * u(rng)), t2(0.5 * u(rng), 0.1 * u(rng));
        const cplx t = std::polar(rad(rng), ang(rng));
        const cplx lhs = unit_circle_weight({{"a", a}, {"b", b}, {"t1", t1}, {"t2", t2}}, t);
        const cplx rhs = unit_circle_weight({{"a", b}, {"b", a}, {"t1", t2}, {"t2", t1}}, 1.0 / t);
        CHECK(rel(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("property: rational Chebyshev forms agree") {
    using oracle::lc;
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int it = 0; it < 40; ++it) {
        const double q = 0.4 + 0.5 * std::abs(u(rng)), al = 0.8 * u(rng), de = 0.8 * u(rng);
        const Params p{{"q", q}, {"alpha", al}, {"delta", de}};
        const cplx x(u(rng), 0.3 * u(rng));
        const lc lx = oracle::widen(x), e = lx + lc(0, 1) * std::sqrt(1.0L - lx * lx);
        const lc lq = q, la = al, ld = de;
        for (int n = 0; n <= 6; ++n) {
            CAPTURE(n);
            // Long-double 4phi3, and the size of its largest term.
            lc g = 0;
            long double largest = 0;
            for (int k = 0; k <= n; ++k) {
                const lc t = oracle::qpoch_list({std::pow(lq, -static_cast<long double>(n)),
                                                 la * ld * std::pow(lq, static_cast<long double>(n)), la * e, la / e},
                                                lq, k) /
                             oracle::qpoch_list({lq, la * ld, lq * la * e, lq * la / e}, lq, k) *
                             std::pow(lq, static_cast<long double>(k));
                g += t;
                largest = std::max(largest, std::abs(t));
            }
            const lc f = g / (1.0L - 2.0L * la * lx + la * la);
            CHECK(std::abs(cheby_g({{"q", q}, {"alpha", al}, {"delta", de}}, n, x) - oracle::narrow(g)) <
                  1e-14 * static_cast<double>(largest));
            CHECK(rel(cheby_g(p, n, x), (1.0 - 2.0 * al * x + al * al) * cheby_f(p, n, x)) < 1e-13);
            CHECK(std::abs(cheby_f_sum(p, n, x) - oracle::narrow(f)) <= 1e-11 * std::max(1.0, std::abs(oracle::narrow(f))));
        }
    }
    const Params p{{"q", 0.5}, {"alpha", 0.3}, {"delta", 0.2}};
    for (int n = 0; n <= 6; ++n)
        for (cplx x : {cplx(-0.8), cplx(0.1), cplx(0.6, 0.2)}) {
            const cplx f = cheby_f(p, n, x);
            CHECK(std::abs(cheby_f_sum(p, n, x) - f) < 1e-11 * std::max(1.0, std::abs(f)));
        }
    // The displayed power q^{k(1-k)/2} only matches up to n = 1.
    CHECK(rel(cheby_f_sum(p, 1, 0.4, true), cheby_f(p, 1, 0.4)) < 1e-13);
    CHECK(rel(cheby_f_sum(p, 2, 0.4, true), cheby_f(p, 2, 0.4)) > 1e-2);
}

TEST_CASE("SinhLattice42 pole expansion") {
    const auto m = instantiate("SinhLattice42", {});
    const auto mu = m->spectral_measure();
    for (cplx z : {cplx(0.5, 1.0), cplx(-2.0, 0.3), cplx(3.0, -1.0)}) {
        const cplx st = stieltjes(mu, z);
        CHECK(rel(st, sinh_transform({}, z)) < 1e-7);
        CHECK(rel(sinh_transform_printed({}, z), st) > 1e-3);
        const auto est = minimal_solution_backward(m->spec(), z, 3, 60);
        CHECK(pincherle_residual(m->spec(), z, sinh_transform({}, z), est) < 1e-8);
    }
    // Nodes of the sinh lattice.
    const auto& d = std::get<Discrete>(mu.shape);
    for (int k = 0; k < 4; ++k) {
        const double z = (0.4 * std::pow(0.5, -k - 1) - std::pow(0.5, k + 1) / 0.4) / 2;
        CHECK(std::abs(d.at(k).z - z) < 1e-14);
    }
}

TEST_CASE("SinhLattice42 cosh lattice") {
    const Params p{{"cosh", 1.0}};
    const auto m = instantiate("SinhLattice42", p);
    const auto mu = m->spectral_measure();
    const auto& d = std::get<Discrete>(mu.shape);
    for (int k = 0; k < 4; ++k) {
        const double z = (0.4 * std::pow(0.5, -k - 1) + std::pow(0.5, k + 1) / 0.4) / 2;
        CHECK(std::abs(d.at(k).z - z) < 1e-14);
    }
    const cplx w(0.7, 1.3);
    CHECK(rel(stieltjes(m->spectral_measure(), w), sinh_transform(p, w)) < 1e-10);
    CHECK_THROWS_AS(sinh_transform_printed(p, w), DomainError);
}

TEST_CASE("Pastro21 transforms and moments") {
    const Params p{{"q", 0.5}, {"a", 0.2}, {"b", 0.3}};
    struct Point {
        int n, k;
        cplx z;
    };
    for (const auto& c : {Point{0, 0, 0.0}, Point{2, 1, 0.3}, Point{2, 1, 3.0}, Point{3, 2, cplx(-0.2, 0.1)},
                          Point{1, 0, cplx(1.0, 1.0)}}) {
        CAPTURE(c.n);
        CAPTURE(c.z);
        const auto s = pastro_transform(p, c.n, c.k, c.z);
        CHECK(std::abs(s.lhs - s.rhs) < 1e-9);
    }
    CHECK_THROWS_AS(pastro_transform(p, 2, 1, std::sqrt(0.5)), BranchBoundaryError);
    CHECK_THROWS_AS(pastro_transform(p, 2, 3, 0.1), DomainError);
    for (int m = 0; m <= 3; ++m) {
        const auto a = pastro_moment(p, m), b = pastro_inverse_moment(p, m);
        CHECK(std::abs(a.lhs - a.rhs) < 1e-10);
        CHECK(std::abs(b.lhs - b.rhs) < 1e-10);
    }
    CHECK(std::abs(pastro_moment(p, 0).rhs - 1.0) < 1e-15);
}

TEST_CASE("ChebyshevR2_31 polynomial orthogonality and fraction") {
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= n; ++m) {
            const auto s = chebyshev_polynomial_gram({}, m, n);
            if (m == n)
                CHECK(rel(s.lhs, s.rhs) < 1e-10);
            else
                CHECK(std::abs(s.lhs) < 1e-10);
        }
    CHECK_THROWS_AS(chebyshev_polynomial_gram({}, 3, 2), DomainError);
    const auto one = chebyshev_cf({}, 1.0);
    CHECK(std::abs(one.lhs - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(one.rhs - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("Cauchy2F1_32 total mass") {
    const auto s = cauchy_kappa({{"a", 1.5}, {"b", -0.5}});
    CHECK(std::abs(s.rhs - 1.5) < 1e-15);
    CHECK(std::abs(s.lhs - 1.5) < 1e-10);
    const auto t = cauchy_kappa({{"a", cplx(2.0, 0.5)}, {"b", 0.3}});
    CHECK(rel(t.lhs, t.rhs) < 1e-10);
}

TEST_CASE("Askey-Wilson family integrals") {
    const Params p{{"q", 0.5}, {"alpha", 0.2}, {"beta", 0.3}, {"delta", 0.1}};
    for (cplx z : {cplx(1.5), cplx(0.3, 0.8), cplx(-2.0, -0.5)}) {
        const auto s = stieltjes_w87(p, z);
        CHECK(rel(s.lhs, s.rhs) < 1e-8);
    }
    const auto h = herglotz_value(p);
    CHECK(std::abs(h.lhs - h.rhs) < 1e-9);
    const auto h0 = herglotz_value({{"alpha", 0.0}, {"delta", 0.0}, {"beta", 0.3}});
    CHECK(std::abs(h0.rhs - 1.0 / 0.7) < 1e-15);
    CHECK(std::abs(h0.lhs - h0.rhs) < 1e-9);
    // beta = q: the weight is the rational Chebyshev one up to a constant.
    const Params bq{{"q", 0.5}, {"alpha", 0.3}, {"beta", 0.5}, {"delta", 0.2}};
    const auto hq = herglotz_value(bq);
    CHECK(std::abs(hq.rhs - (1.0 - 0.03) / 0.5) < 1e-14);
    CHECK(rel(elementary_integral(0.3, 0.2).lhs * (1.0 - 0.06) * (1.0 - 0.03) / 0.5, hq.lhs) < 1e-10);
    CHECK_THROWS_AS(herglotz_value({{"q", 0.01}, {"alpha", 0.9}, {"beta", 0.9}, {"delta", 0.9}}), DomainError);

    const auto b = qbeta_integral(p);
    CHECK(std::abs(b.lhs - b.rhs) < 1e-9);
    CHECK(std::abs(b.rhs - 1.0 / (1.0 - 0.04 * 0.3)) < 1e-15);
    const auto b0 = qbeta_integral({{"alpha", 0.0}});
    CHECK(b0.rhs == cplx(1.0));
    CHECK(std::abs(b0.lhs - 1.0) < 1e-9);

    const auto c = connection_integral(p, 0.5 * 0.3);
    CHECK(std::abs(c.rhs - b.rhs) < 1e-13);
    CHECK(std::abs(c.lhs - b.lhs) < 1e-13);
    for (cplx g : {cplx(0.25), cplx(-0.4), cplx(0.1, 0.3)}) {
        const auto s = connection_integral(p, g);
        CHECK(std::abs(s.lhs - s.rhs) < 1e-9);
    }
    CHECK_THROWS_AS(connection_integral(p, 1.0), DomainError);
}

TEST_CASE("elementary integral") {
    for (auto [a, d] : {std::pair<cplx, cplx>{0.5, 0.25}, {0.3, -0.4}, {0.6, 0.2}, {cplx(0.2, 0.5), cplx(-0.3, 0.1)}}) {
        const auto s = elementary_integral(a, d);
        CHECK(std::abs(s.lhs - s.rhs) < 1e-10);
    }
    CHECK_THROWS_AS(elementary_integral(1.0, 0.2), DomainError);
}

TEST_CASE("coordinates round trip") {
    for (auto c : {Coordinate::Plain, Coordinate::Joukowski, Coordinate::Sinh})
        for (cplx z : {cplx(1.7, 0.4), cplx(-2.0, -1.0)})
            CHECK(std::abs(coordinate_forward(c, coordinate_inverse(c, z)) - z) < 1e-14);
}
