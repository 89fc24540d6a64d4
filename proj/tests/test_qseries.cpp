#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "rfrac/errors.hpp"
#include "rfrac/qseries.hpp"

using namespace rfrac;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

cplx draw(std::mt19937_64& rng, double rmin, double rmax) {
    std::uniform_real_distribution<double> r(rmin, rmax), th(-3.14159, 3.14159);
    return std::polar(r(rng), th(rng));
}

} // namespace

TEST_CASE("shifted factorial") {
    CHECK(shifted_factorial(2.0, 0) == cplx(1.0));
    CHECK(std::abs(shifted_factorial(1.0, 4) - 24.0) < 1e-15);
    CHECK(std::abs(shifted_factorial(0.5, 3) - 0.5 * 1.5 * 2.5) < 1e-15);
}

TEST_CASE("QContext rejects |q| >= 1 and bad tolerances") {
    CHECK_THROWS_AS(QContext(1.0), DomainError);
    CHECK_THROWS_AS(QContext(cplx(0.8, 0.8)), DomainError);
    CHECK_THROWS_AS(QContext(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(QContext(0.5, 1e-16, 1e-16, 0), DomainError);
    CHECK_NOTHROW(QContext(-0.99));
}

TEST_CASE("q-Pochhammer finite and infinite") {
    QContext ctx(0.5);
    CHECK(q_pochhammer(ctx, 0.7, 0) == cplx(1.0));
    CHECK(std::abs(q_pochhammer(ctx, 2.0, 3)) == 0.0);
    const auto ref = oracle::narrow(oracle::qpoch_inf(0.3L, 0.5L, 200));
    CHECK(rel(q_pochhammer(ctx, 0.3, inf), ref) < 1e-12);
    const cplx a(0.2, -0.7);
    const auto refc = oracle::narrow(oracle::qpoch_inf(oracle::widen(a), 0.5L, 200));
    CHECK(rel(q_pochhammer(ctx, a, inf), refc) < 1e-12);
    CHECK(q_pochhammer(ctx, 0.0, inf) == cplx(1.0));
}

TEST_CASE("multi q-Pochhammer") {
    QContext ctx(0.5);
    CHECK(multi_q_pochhammer(ctx, {}, 5) == cplx(1.0));
    CHECK(multi_q_pochhammer(ctx, {0.0, 0.0}, inf) == cplx(1.0));
    const cplx by_hand = (1.0 - 0.3) * (1.0 - 0.15) * (1.0 - 0.4) * (1.0 - 0.2);
    CHECK(rel(multi_q_pochhammer(ctx, {0.3, 0.4}, 2), by_hand) < 1e-15);
}

TEST_CASE("2F1 closed cases and brute-force sum") {
    CHECK(std::abs(f21_value(1.0, 0.7, 0.7, 0.5) - 2.0) < 1e-14);
    CHECK(std::abs(f21_value(-2.0, 1.0, 1.0, 1.0)) < 1e-15);
    const auto ref = oracle::narrow(oracle::f21(0.5L, 0.25L, 1.5L, 0.3L, 500));
    CHECK(rel(f21_value(0.5, 0.25, 1.5, 0.3), ref) < 1e-12);
    SeriesResult r = hyper_2f1(0.5, 0.25, 1.5, 0.3);
    CHECK(r.converged);
    CHECK(r.tail_bound <= 1e-16 * std::max(1.0, std::abs(r.value)));
}

TEST_CASE("2F1 error paths") {
    CHECK_THROWS_AS(hyper_2f1(0.5, 0.5, -1.0, 0.3), PoleError);
    CHECK_THROWS_AS(hyper_2f1(0.5, 0.5, 1.5, 1.5), DomainError);
    CHECK_THROWS_AS(hyper_2f1(0.5, 0.5, 1.5, 0.999999, 1e-16, 50), DivergenceError);
    // terminates before the pole in c is reached
    CHECK_NOTHROW(hyper_2f1(-1.0, 1.0, -3.0, 0.5));
}

TEST_CASE("terminating 2F1 is the polynomial") {
    for (int n = 0; n <= 8; ++n) {
        const cplx z(0.7, -1.3);
        cplx direct = 0.0;
        for (int k = 0; k <= n; ++k)
            direct += shifted_factorial(-n, k) * shifted_factorial(0.4, k) /
                      (shifted_factorial(1.7, k) * shifted_factorial(1.0, k)) * std::pow(z, k);
        CHECK(std::abs(f21_value(-n, 0.4, 1.7, z) - direct) <= 1e-13 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("basic phi: trivial argument, two-term sum, q-Gauss") {
    QContext ctx(0.5);
    CHECK(phi_value(ctx, {0.3, 0.2}, {0.9}, 0.0) == cplx(1.0));
    const double q = 0.5, b = 0.3, c = 0.7, z = 0.6;
    const cplx two = 1.0 + (1.0 - 1 / q) * (1.0 - b) / ((1.0 - c) * (1.0 - q)) * z;
    SeriesResult r = basic_phi(ctx, {1 / q, b}, {c}, z);
    CHECK(r.terms_used == 2);
    CHECK(rel(r.value, two) < 1e-15);
    // c/(ab) must lie inside the unit disc for the series to converge.
    const double a = 0.6, bb = 0.7, cc = 0.3;
    const cplx lhs = phi_value(ctx, {a, bb}, {cc}, cc / (a * bb));
    const cplx rhs = multi_q_pochhammer(ctx, {cc / a, cc / bb}, inf) / multi_q_pochhammer(ctx, {cc, cc / (a * bb)}, inf);
    CHECK(rel(lhs, rhs) < 1e-12);
}

TEST_CASE("basic phi pole before termination") {
    QContext ctx(0.5);
    CHECK_THROWS_AS(basic_phi(ctx, {0.3}, {4.0}, 0.2), PoleError);  // 1 - 4 q^2 = 0
}

TEST_CASE("basic phi divergence") {
    QContext ctx(0.5);
    CHECK_THROWS_AS(basic_phi(ctx, {0.2, 0.3}, {0.4}, 0.4 / 0.06), DivergenceError);
}

TEST_CASE("basic phi sign/power factor") {
    QContext ctx(0.5);
    CHECK_THROWS_AS(basic_phi(ctx, {0.3, 0.2, 0.4}, {0.1}, 0.7), DomainError);
    const auto ref3 = oracle::narrow(oracle::phi({0.3L, 0.2L, 0.4L}, {0.1L, 0.5L}, 0.5L, 0.7L, 200));
    CHECK(rel(phi_value(ctx, {0.3, 0.2, 0.4}, {0.1, 0.5}, 0.7), ref3) < 1e-13);
    const auto ref0 = oracle::narrow(oracle::phi({0.3L}, {0.1L, 0.6L}, 0.5L, 2.0L, 200));
    CHECK(rel(phi_value(ctx, {0.3}, {0.1, 0.6}, 2.0), ref0) < 1e-13);
}

TEST_CASE("8W7 trivial argument and explicit 8phi7 expansion") {
    QContext ctx(0.5);
    CHECK(w87(ctx, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.0).value == cplx(1.0));
    const cplx a(0.1, 0.05), b = 0.2, c = 0.3, d = -0.25, e = 0.4, f = 0.35, z = 0.6;
    const auto ref = oracle::narrow(oracle::w87_explicit(oracle::widen(a), oracle::widen(b), oracle::widen(c),
                                                         oracle::widen(d), oracle::widen(e), oracle::widen(f),
                                                         0.5L, oracle::widen(z), 300));
    CHECK(rel(w87(ctx, a, b, c, d, e, f, z).value, ref) < 1e-12);
}

TEST_CASE("8W7 per-term factor against the square-root pairs") {
    // (q sqrt a, -q sqrt a; q)_n / (sqrt a, -sqrt a; q)_n == (1 - a q^{2n})/(1 - a)
    const oracle::lc q = 0.5L, a(0.3L, 0.2L);
    const oracle::lc s = std::sqrt(a);
    for (int n = 0; n <= 50; ++n) {
        const oracle::lc pairs = oracle::qpoch(q * s, q, n) * oracle::qpoch(-q * s, q, n) /
                                 (oracle::qpoch(s, q, n) * oracle::qpoch(-s, q, n));
        const oracle::lc closed = (1.0L - a * std::pow(q, 2.0L * n)) / (1.0L - a);
        CHECK(std::abs(pairs - closed) < 1e-13L * std::abs(closed));
    }
}

TEST_CASE("summable very-well-poised 6phi5") {
    // e = aq/f cancels the (e, f) pair and leaves 6W5(a; b, c, d; q, aq/(bcd)).
    QContext ctx(0.5);
    const double q = 0.5, a = 0.1, b = 0.5, c = 0.6, d = 0.7, f = 0.7;
    const cplx lhs = w87(ctx, a, b, c, d, a * q / f, f, a * q / (b * c * d)).value;
    const cplx rhs = multi_q_pochhammer(ctx, {a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)}, inf) /
                     multi_q_pochhammer(ctx, {a * q / b, a * q / c, a * q / d, a * q / (b * c * d)}, inf);
    CHECK(rel(lhs, rhs) < 1e-12);
}

TEST_CASE("gamma") {
    CHECK(std::abs(gamma_fn(1.0) - 1.0) < 1e-14);
    CHECK(std::abs(gamma_fn(5.0) - 24.0) < 1e-12);
    CHECK(std::abs(gamma_fn(0.5) - 1.7724538509055160) < 1e-14);
    CHECK(rel(gamma_fn(-1.5), 2.3632718012073548) < 1e-13);
    CHECK(rel(gamma_fn(cplx(1, 1)), cplx(0.49801566811835604, -0.15494982830181069)) < 1e-13);
    CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
    CHECK_THROWS_AS(gamma_fn(-3.0), PoleError);
}

TEST_CASE("property: shifted-factorial splitting") {
    std::mt19937_64 rng(1);
    for (int it = 0; it < 100; ++it) {
        QContext ctx(draw(rng, 0.05, 0.9));
        const cplx a = draw(rng, 0.05, 2.0);
        const int m = static_cast<int>(rng() % 12), n = static_cast<int>(rng() % 12);
        const cplx lhs = q_pochhammer(ctx, a, m + n);
        const cplx rhs = q_pochhammer(ctx, a, m) * q_pochhammer(ctx, a * std::pow(ctx.q(), m), n);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1e-300, std::abs(lhs)) + 1e-300);
    }
}

TEST_CASE("property: Heine transformation") {
    std::mt19937_64 rng(2);
    for (int it = 0; it < 100; ++it) {
        QContext ctx(draw(rng, 0.1, 0.9));
        const cplx a = draw(rng, 0.05, 0.9), b = draw(rng, 0.05, 0.9), c = draw(rng, 0.05, 0.9),
                   z = draw(rng, 0.05, 0.9);
        const cplx lhs = phi_value(ctx, {a, b}, {c}, z);
        const cplx rhs = multi_q_pochhammer(ctx, {b, a * z}, inf) / multi_q_pochhammer(ctx, {c, z}, inf) *
                         phi_value(ctx, {c / b, z}, {a * z}, b);
        CHECK(rel(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("property: q-Pfaff-Saalschutz") {
    // Moduli of a, b in [0.5, 0.9]: with |c/(ab)| ~ 10 and n = 8 the terminating sum cancels
    // through ~1e8 and double precision cannot hold 1e-11.
    std::mt19937_64 rng(3);
    for (int it = 0; it < 100; ++it) {
        QContext ctx(draw(rng, 0.3, 0.9));
        const cplx q = ctx.q();
        const int n = static_cast<int>(rng() % 9);
        const cplx a = draw(rng, 0.5, 0.9), b = draw(rng, 0.5, 0.9), c = draw(rng, 0.3, 0.9);
        const cplx lhs = phi_value(ctx, {std::pow(q, -n), a, b}, {c, a * b * std::pow(q, 1 - n) / c}, q);
        const cplx rhs = multi_q_pochhammer(ctx, {c / a, c / b}, n) / multi_q_pochhammer(ctx, {c, c / (a * b)}, n);
        INFO("q=", q, " n=", n, " a=", a, " b=", b, " c=", c);
        CHECK(rel(lhs, rhs) < 1e-11);
    }
}

TEST_CASE("property: q-Gauss sum") {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 100; ++it) {
        QContext ctx(draw(rng, 0.1, 0.9));
        const cplx a = draw(rng, 0.5, 0.9), b = draw(rng, 0.5, 0.9);
        const cplx c = draw(rng, 0.01, 0.85) * std::abs(a * b);
        const cplx lhs = phi_value(ctx, {a, b}, {c}, c / (a * b));
        const cplx rhs = multi_q_pochhammer(ctx, {c / a, c / b}, inf) / multi_q_pochhammer(ctx, {c, c / (a * b)}, inf);
        CHECK(rel(lhs, rhs) < 1e-10);
    }
}
