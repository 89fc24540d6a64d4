#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rfrac/recurrence.hpp"

namespace rfrac {

// x^k S_n (R_II) or x^k R_n (R_I).
struct XkSn {
    int k = 0;
    int n = 0;
};

// prod_{j=1..na} (x - a_{j+1})^{-1} prod_{j=1..nb} (x - b_{j+1})^{-1}
struct InverseFactors {
    int na = 0;
    int nb = 0;
};

// p(x) / D_m(x) with p given by ascending coefficients, deg p <= 2m.
// D_m = prod_{j=2..m+1} (x - a_j)(x - b_j) for R_II and prod (x - a_j) for R_I.
struct RationalNumerator {
    std::vector<cplx> coeffs;
    int m = 0;
};

using BasisDescriptor = std::variant<XkSn, InverseFactors, RationalNumerator>;

class MomentFunctional {
public:
    FractionKind kind() const { return spec_.kind; }
    const RecurrenceSpec& spec() const { return spec_; }

    // R_I: L[x^n R_n]; R_II: N_n.
    cplx norm(int n) const;
    const std::vector<cplx>& norms() const { return norms_; }
    const std::vector<cplx>& kappa() const { return kappa_; }
    cplx N0() const { return n0_; }
    cplx N1() const { return n1_; }

    // Values fixed during construction (first rational moments), keyed by a short label.
    const std::map<std::string, cplx>& basis_values() const { return basis_values_; }

    friend MomentFunctional build_RI(const RecurrenceSpec&, int, std::optional<cplx>);
    friend MomentFunctional build_RII(const RecurrenceSpec&, cplx, cplx, int);
    friend MomentFunctional build_RII_integral(const RecurrenceSpec&, int);

private:
    explicit MomentFunctional(RecurrenceSpec spec) : spec_(std::move(spec)) {}

    RecurrenceSpec spec_;
    cplx n0_{};  // L[1]
    cplx n1_{};  // R_II only
    std::vector<cplx> norms_;
    std::vector<cplx> kappa_;
    std::map<std::string, cplx> basis_values_;
};

// L[1] = lambda_1 unless `l1` overrides it (models with lambda_1 = 0 use l1 = 1).
MomentFunctional build_RI(const RecurrenceSpec& spec, int nmax = 16, std::optional<cplx> l1 = {});
MomentFunctional build_RII(const RecurrenceSpec& spec, cplx N0, cplx N1, int nmax = 16);
// N_0 = kappa_1, N_1 = kappa_1 - 1: the functional given by the Stieltjes measure of the fraction.
MomentFunctional build_RII_integral(const RecurrenceSpec& spec, int nmax = 16);

enum class TailSeed { Zero, FixedPoint };

struct KappaOptions {
    int depth = 64;
    double tol = 1e-12;
    int max_depth = 1 << 24;
    TailSeed seed = TailSeed::FixedPoint;
};

// kappa_1..kappa_jmax (index 0 holds kappa_1).
std::vector<cplx> kappa_tails(const RecurrenceSpec& spec, int jmax, const KappaOptions& opt = {});

cplx functional_apply(const MomentFunctional& fn, const BasisDescriptor& basis);

} // namespace rfrac
