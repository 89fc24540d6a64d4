#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "rfrac/qseries.hpp"

namespace rfrac {

enum class FractionKind { RI, RII };

using Sequence = std::function<cplx(int)>;

// Denominator of the n = 0 Pincherle ratio, i.e. lambda_1 (z-a_1)(z-b_1) X_{-1},
// given z, X_0 and X_1 of a minimal solution.
using Lambda1Limit = std::function<cplx(cplx z, cplx x0, cplx x1)>;

// Coefficients of
//   R_I : P_n = (z - c_n) P_{n-1} - lambda_n (z - a_n) P_{n-2}
//   R_II: P_n = (z - c_n) P_{n-1} - lambda_n (z - a_n)(z - b_n) P_{n-2}
// indexed from n = 1. `max_index` < 0 means unbounded.
struct RecurrenceSpec {
    FractionKind kind = FractionKind::RI;
    Sequence c;
    Sequence lambda;
    Sequence a;
    Sequence b;  // empty for R_I
    std::optional<Lambda1Limit> lambda1_limit;
    int max_index = -1;

    static RecurrenceSpec r1(Sequence c, Sequence lambda, Sequence a);
    static RecurrenceSpec r2(Sequence c, Sequence lambda, Sequence a, Sequence b);

    cplx coef_c(int n) const;
    cplx coef_lambda(int n) const;
    cplx coef_a(int n) const;
    cplx coef_b(int n) const;
    // lambda_n times the interpolation factor(s) at z.
    cplx multiplier(int n, cplx z) const;
    // Product of interpolation factors (z - a_n) or (z - a_n)(z - b_n).
    cplx factor(int n, cplx z) const;
};

// P_{-1..N} and Q_{0..N} at one point.
struct PQPair {
    std::vector<cplx> P;  // P[0] is P_{-1}
    std::vector<cplx> Q;  // Q[0] is Q_0
    cplx z{};

    cplx p(int n) const { return P.at(static_cast<std::size_t>(n + 1)); }
    cplx q(int n) const { return Q.at(static_cast<std::size_t>(n)); }
    int size() const { return static_cast<int>(Q.size()) - 1; }
};

struct Convergents {
    std::vector<cplx> values;            // entry n-1 holds Q_n/P_n
    std::vector<bool> zero_denominator;  // flagged entries carry NaN
};

struct MinimalSolutionEstimate {
    std::vector<cplx> values;  // X_0..X_window, X_0 = 1
    cplx ratio_at_0{};
    double residual = 0.0;
    bool valid = false;
    int start_used = 0;
};

PQPair forward(const RecurrenceSpec& spec, cplx z, int N);

// R_n (R_I) or S_n (R_II): P_n over the interpolation factors at a_{k+1}, b_{k+1}.
std::vector<cplx> rationalize(const RecurrenceSpec& spec, const PQPair& pq);

Convergents convergents(const RecurrenceSpec& spec, cplx z, int N);

struct BackwardOptions {
    double tol = 1e-11;
    double residual_tol = 1e-10;
    int max_start = 40960;
    cplx seed_start = 1.0;  // X_start
    cplx seed_next = 0.0;   // X_{start+1}
};

MinimalSolutionEstimate minimal_solution_backward(const RecurrenceSpec& spec, cplx z, int window,
                                                  int start = 40, const BackwardOptions& opt = {});

// X_0 / (lambda_1 (z-a_1)(z-b_1) X_{-1}) from X_0 and X_1.
cplx pincherle_ratio(const RecurrenceSpec& spec, cplx z, cplx x0, cplx x1);

double pincherle_residual(const RecurrenceSpec& spec, cplx z, cplx cf_value,
                          const MinimalSolutionEstimate& est);

// Max relative defect of `x` (x[0] = X_{first}) against the recurrence over n = first+2..
double recurrence_defect(const RecurrenceSpec& spec, cplx z, const std::vector<cplx>& x, int first);

} // namespace rfrac
