#pragma once

#include "rfrac/measures.hpp"
#include "rfrac/models.hpp"

// Closed-form identities attached to individual models. Each takes the model's parameters
// (missing keys fall back to the catalog defaults) and returns a quadrature side and a closed side.
namespace rfrac {

struct Sides {
    cplx lhs{};
    cplx rhs{};
};

// Pastro21
Sides pastro_transform(const Params& p, int n, int k, cplx z, const QuadratureConfig& cfg = {});
// integral of P_m against the spectral density, and minus that of t^{-m-1} P_m.
Sides pastro_moment(const Params& p, int m, const QuadratureConfig& cfg = {});
Sides pastro_inverse_moment(const Params& p, int m, const QuadratureConfig& cfg = {});

// ChebyshevR2_31: polynomial orthogonality with the weight carrying (a-x)^{-n-1}(b-x)^{-n-1}.
// Only m <= n converges.
Sides chebyshev_polynomial_gram(const Params& p, int m, int n, const QuadratureConfig& cfg = {});
// Pincherle value of the fraction against the half-line Stieltjes integral.
Sides chebyshev_cf(const Params& p, cplx z, const QuadratureConfig& cfg = {});

// Cauchy2F1_32
Sides cauchy_kappa(const Params& p, const QuadratureConfig& cfg = {});

// UnitCircle41 weight f(a, b, t1, t2, t) on |t| = 1, without the 1/(2 pi) of the Gram density.
cplx unit_circle_weight(const Params& p, cplx t);

// SinhLattice42 transform of the discrete measure as displayed (sinh family only), and the corrected
// closed form (either family).
cplx sinh_transform_printed(const Params& p, cplx z);
cplx sinh_transform(const Params& p, cplx z);

// Rahman52 / ChebyRational51 family (q, alpha, beta, delta).
Sides stieltjes_w87(const Params& p, cplx z, const QuadratureConfig& cfg = {});
Sides herglotz_value(const Params& p, const QuadratureConfig& cfg = {});
Sides qbeta_integral(const Params& p, const QuadratureConfig& cfg = {});
// rhs uses the prefactor (gamma, alpha^2 gamma)_inf / (q beta, alpha^2 beta)_inf.
Sides connection_integral(const Params& p, cplx gamma, const QuadratureConfig& cfg = {});

// ChebyRational51 (q, alpha, delta).
cplx cheby_g(const Params& p, int n, cplx x);
// 4phi3 over (1 - 2 alpha x + alpha^2).
cplx cheby_f(const Params& p, int n, cplx x);
// Finite sum of simple fractions; `printed_exponent` uses q^{k(1-k)/2} instead of q^{k(k+1)/2 - nk}.
cplx cheby_f_sum(const Params& p, int n, cplx x, bool printed_exponent = false);
// (2/pi) integral of sqrt(1-x^2)/((1-2 alpha x+alpha^2)(1-2 delta x+delta^2)) against 1/(1 - alpha delta).
Sides elementary_integral(cplx alpha, cplx delta, const QuadratureConfig& cfg = {});

} // namespace rfrac
