#pragma once
// Brute-force reference implementations in long double. Deliberately naive: fixed term
// counts, no early exits, no shared code with the library.

#include <complex>
#include <vector>

namespace oracle {

using lc = std::complex<long double>;

inline lc widen(std::complex<double> z) { return {z.real(), z.imag()}; }
inline std::complex<double> narrow(lc z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline lc qpoch(lc a, lc q, int n) {
    lc p = 1;
    for (int j = 0; j < n; ++j) p *= 1.0L - a * std::pow(q, static_cast<long double>(j));
    return p;
}

inline lc qpoch_inf(lc a, lc q, int factors = 400) { return qpoch(a, q, factors); }

inline lc qpoch_list(const std::vector<lc>& as, lc q, int n) {
    lc p = 1;
    for (lc a : as) p *= qpoch(a, q, n);
    return p;
}

inline lc qpoch_list_inf(const std::vector<lc>& as, lc q) {
    lc p = 1;
    for (lc a : as) p *= qpoch_inf(a, q);
    return p;
}

// r phi s summed term by term from its closed-form coefficients.
inline lc phi(const std::vector<lc>& up, const std::vector<lc>& lo, lc q, lc z, int terms) {
    lc s = 0;
    const int extra = 1 + static_cast<int>(lo.size()) - static_cast<int>(up.size());
    for (int n = 0; n < terms; ++n) {
        lc t = qpoch_list(up, q, n) / (qpoch_list(lo, q, n) * qpoch(q, q, n)) * std::pow(z, static_cast<long double>(n));
        const lc sign = (n % 2 ? -1.0L : 1.0L) * std::pow(q, static_cast<long double>(n) * (n - 1) / 2);
        for (int e = 0; e < extra; ++e) t *= sign;
        s += t;
        if (std::abs(t) == 0 && n > 0) break;
    }
    return s;
}

inline lc rising(lc a, int n) {
    lc p = 1;
    for (int j = 0; j < n; ++j) p *= a + static_cast<long double>(j);
    return p;
}

inline lc f21(lc a, lc b, lc c, lc z, int terms) {
    lc s = 0;
    lc fact = 1;
    for (int n = 0; n < terms; ++n) {
        if (n > 0) fact *= static_cast<long double>(n);
        s += rising(a, n) * rising(b, n) / (rising(c, n) * fact) * std::pow(z, static_cast<long double>(n));
    }
    return s;
}

// 8phi7 with the square-root parameters written out explicitly.
inline lc w87_explicit(lc a, lc b, lc c, lc d, lc e, lc f, lc q, lc z, int terms) {
    const lc sa = std::sqrt(a);
    std::vector<lc> up{a, q * sa, -q * sa, b, c, d, e, f};
    std::vector<lc> lo{sa, -sa, a * q / b, a * q / c, a * q / d, a * q / e, a * q / f};
    return phi(up, lo, q, z, terms);
}

} // namespace oracle
