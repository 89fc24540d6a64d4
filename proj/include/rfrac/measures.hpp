#pragma once

#include <functional>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "rfrac/qseries.hpp"

namespace rfrac {

using PointFn = std::function<cplx(cplx)>;

// dalpha = density(t) dt on |t| = radius, traversed counterclockwise.
struct CircleContour {
    double radius = 1.0;
    PointFn density;
};

// dalpha = weight(x) dx on (lo, hi); lo may be -infinity.
// With `smooth` set the weight is sqrt(1 - s^2) smooth(x), s the affine image of x in [-1, 1],
// and second-kind Gauss-Chebyshev is used.
struct Interval {
    double lo = -1.0;
    double hi = 1.0;
    PointFn weight;
    PointFn smooth;
};

// dalpha = density(t) dt on Re t = re, upward.
struct VerticalLine {
    double re = 0.0;
    PointFn density;
};

struct MassPoint {
    cplx z;
    cplx mass;
};

// Point masses, indexed from 0; count < 0 means an infinite sequence truncated by tail_terms.
struct Discrete {
    std::function<MassPoint(int)> at;
    int count = -1;

    static Discrete finite(std::vector<MassPoint> pts);
};

struct Measure {
    std::variant<CircleContour, Interval, VerticalLine, Discrete> shape;
    std::string support;  // human readable description of the singular set
};

struct QuadratureConfig {
    int nodes = 64;
    int tail_terms = 60;
    double tol = 1e-12;
    int max_refinements = 8;
    int threads = 1;
};

// Square matrix of complex entries, row-major.
class CMatrix {
public:
    explicit CMatrix(int n = 0) : n_(n), data_(static_cast<std::size_t>(n) * n) {}
    int size() const { return n_; }
    cplx& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    cplx operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<cplx> data_;
};

using Family = std::function<cplx(int n, cplx t)>;

// Fills out[0..count) with integrand values at t.
using VectorIntegrand = std::function<void(cplx t, std::span<cplx> out)>;

struct IntegralResult {
    std::vector<cplx> values;
    int levels_used = 0;
    double last_change = 0.0;
};

IntegralResult integrate_many(const Measure& m, const VectorIntegrand& f, int count,
                              const QuadratureConfig& cfg = {});
cplx integrate(const Measure& m, const PointFn& f, const QuadratureConfig& cfg = {});
cplx stieltjes(const Measure& m, cplx z, const QuadratureConfig& cfg = {});
cplx normalization(const Measure& m, const QuadratureConfig& cfg = {});
CMatrix weighted_gram(const Measure& m, const Family& left, const Family& right, int N,
                      const QuadratureConfig& cfg = {});

// Distance from z to the support; used by stieltjes to refuse points on it.
double support_distance(const Measure& m, cplx z, const QuadratureConfig& cfg = {});

} // namespace rfrac
