#include "rfrac/measures.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <thread>

#include "rfrac/errors.hpp"

namespace rfrac {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int kGaussOrder = 20;
constexpr std::size_t kChunk = 256;
constexpr double kLineSpan = 6.0;
constexpr double kLineDrop = 1e-17;

struct GaussLegendre {
    std::array<double, kGaussOrder> x{};
    std::array<double, kGaussOrder> w{};
};

// Nodes and weights on [-1, 1] by Newton iteration on P_n.
const GaussLegendre& gauss_legendre() {
    static const GaussLegendre rule = [] {
        GaussLegendre g;
        const int n = kGaussOrder;
        for (int i = 0; i < n; ++i) {
            long double x = std::cos(pi * (i + 0.75) / (n + 0.5));
            long double dp = 0;
            for (int it = 0; it < 100; ++it) {
                long double p0 = 1, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1);
                long double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-19L) break;
            }
            g.x[i] = static_cast<double>(x);
            g.w[i] = static_cast<double>(2 / ((1 - x * x) * dp * dp));
        }
        return g;
    }();
    return rule;
}

struct NodeSet {
    std::vector<cplx> t;
    std::vector<cplx> w;
};

NodeSet circle_nodes(const CircleContour& c, int count) {
    NodeSet s;
    s.t.reserve(count);
    s.w.reserve(count);
    const double h = 2 * pi / count;
    for (int j = 0; j < count; ++j) {
        const cplx t = std::polar(c.radius, h * j);
        s.t.push_back(t);
        s.w.push_back(c.density(t) * cplx(0, 1) * t * h);
    }
    return s;
}

NodeSet chebyshev_nodes(const Interval& iv, int count) {
    NodeSet s;
    const double mid = (iv.hi + iv.lo) / 2, half = (iv.hi - iv.lo) / 2;
    for (int j = 1; j <= count; ++j) {
        const double th = pi * j / (count + 1);
        const double x = mid + half * std::cos(th);
        const double sn = std::sin(th);
        s.t.emplace_back(x, 0.0);
        s.w.push_back(iv.smooth(cplx(x, 0.0)) * (half * pi / (count + 1) * sn * sn));
    }
    return s;
}

NodeSet legendre_nodes(const Interval& iv, int panels) {
    const GaussLegendre& g = gauss_legendre();
    NodeSet s;
    const bool lower_inf = std::isinf(iv.lo), upper_inf = std::isinf(iv.hi);
    if (lower_inf && upper_inf) throw DomainError("doubly infinite intervals are not supported");
    const double a = (lower_inf || upper_inf) ? 0.0 : iv.lo;
    const double b = (lower_inf || upper_inf) ? 1.0 : iv.hi;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double pa = a + p * h;
        for (int i = 0; i < kGaussOrder; ++i) {
            const double s_ = pa + h / 2 * (1 + g.x[i]);
            double x = s_, jac = 1.0;
            if (lower_inf || upper_inf) {
                // x = end -+ y^2 with y = s/(1-s); removes a sqrt endpoint singularity.
                const double y = s_ / (1 - s_);
                jac = 2 * y / ((1 - s_) * (1 - s_));
                x = lower_inf ? iv.hi - y * y : iv.lo + y * y;
            }
            s.t.emplace_back(x, 0.0);
            s.w.push_back(iv.weight(cplx(x, 0.0)) * (jac * g.w[i] * h / 2));
        }
    }
    return s;
}

// t = re + i sinh(pi/2 sinh s), trapezoid in s on [-kLineSpan, kLineSpan]: algebraic decay of the
// density becomes double-exponential decay in s.
NodeSet line_nodes(const VerticalLine& v, int count) {
    NodeSet s;
    const double h = 2 * kLineSpan / count;
    for (int j = 0; j < count; ++j) {
        const double u = -kLineSpan + (j + 0.5) * h;
        const double inner = pi / 2 * std::sinh(u);
        const cplx t(v.re, std::sinh(inner));
        s.t.push_back(t);
        s.w.push_back(v.density(t) * cplx(0, pi / 2 * std::cosh(u) * std::cosh(inner) * h));
    }
    // Far nodes carry no weight worth keeping, and integrands with growing factors overflow there.
    double top = 0;
    for (cplx w : s.w) top = std::max(top, std::abs(w));
    for (cplx& w : s.w)
        if (std::abs(w) < kLineDrop * top) w = 0.0;
    return s;
}

NodeSet nodes_at(const Measure& m, const QuadratureConfig& cfg, int level) {
    const int count = cfg.nodes << level;
    return std::visit(
        [&](const auto& shape) -> NodeSet {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, CircleContour>) {
                return circle_nodes(shape, count);
            } else if constexpr (std::is_same_v<T, Interval>) {
                if (shape.smooth) return chebyshev_nodes(shape, count);
                return legendre_nodes(shape, std::max(1, count / kGaussOrder));
            } else if constexpr (std::is_same_v<T, VerticalLine>) {
                return line_nodes(shape, count);
            } else {
                throw DomainError("discrete measures have no quadrature nodes");
            }
        },
        m.shape);
}

// Weighted sum in fixed chunk order, so results do not depend on the thread count.
std::vector<cplx> reduce(const NodeSet& s, const VectorIntegrand& f, int count, int threads) {
    const std::size_t nchunks = (s.t.size() + kChunk - 1) / kChunk;
    std::vector<cplx> partial(nchunks * static_cast<std::size_t>(count), 0.0);
    auto work = [&](std::size_t first) {
        std::vector<cplx> buf(static_cast<std::size_t>(count));
        for (std::size_t c = first; c < nchunks; c += static_cast<std::size_t>(threads)) {
            cplx* acc = &partial[c * count];
            for (std::size_t i = c * kChunk; i < std::min(s.t.size(), (c + 1) * kChunk); ++i) {
                if (s.w[i] == 0.0) continue;
                f(s.t[i], buf);
                for (int k = 0; k < count; ++k) acc[k] += s.w[i] * buf[k];
            }
        }
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, static_cast<std::size_t>(t));
    }
    std::vector<cplx> out(static_cast<std::size_t>(count), 0.0);
    for (std::size_t c = 0; c < nchunks; ++c)
        for (int k = 0; k < count; ++k) out[k] += partial[c * count + k];
    return out;
}

double max_abs(const std::vector<cplx>& v) {
    double m = 0;
    for (cplx x : v) m = std::max(m, std::abs(x));
    return m;
}

bool finite(const std::vector<cplx>& v) {
    for (cplx x : v)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

IntegralResult sum_discrete(const Discrete& d, const VectorIntegrand& f, int count,
                            const QuadratureConfig& cfg) {
    IntegralResult r;
    r.values.assign(static_cast<std::size_t>(count), 0.0);
    std::vector<cplx> buf(static_cast<std::size_t>(count));
    const int limit = d.count >= 0 ? d.count : cfg.tail_terms;
    int quiet = 0;
    for (int k = 0; k < limit; ++k) {
        const MassPoint p = d.at(k);
        f(p.z, buf);
        double term = 0;
        for (int i = 0; i < count; ++i) {
            const cplx v = p.mass * buf[i];
            r.values[i] += v;
            term = std::max(term, std::abs(v));
        }
        r.levels_used = k + 1;
        r.last_change = term;
        if (d.count < 0) {
            quiet = term <= cfg.tol * std::max(max_abs(r.values), 1e-300) ? quiet + 1 : 0;
            if (quiet >= 3) break;
        }
    }
    return r;
}

void validate(const Measure& m) {
    std::visit(
        [](const auto& shape) {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, CircleContour>) {
                if (!(shape.radius > 0)) throw DomainError("circle radius must be positive");
                if (!shape.density) throw DomainError("circle measure without density");
            } else if constexpr (std::is_same_v<T, Interval>) {
                if (!(shape.lo < shape.hi)) throw DomainError("interval needs lo < hi");
                if (!shape.weight && !shape.smooth) throw DomainError("interval measure without weight");
            } else if constexpr (std::is_same_v<T, VerticalLine>) {
                if (!shape.density) throw DomainError("line measure without density");
            } else {
                if (!shape.at) throw DomainError("discrete measure without points");
            }
        },
        m.shape);
}

} // namespace

Discrete Discrete::finite(std::vector<MassPoint> pts) {
    Discrete d;
    d.count = static_cast<int>(pts.size());
    d.at = [pts = std::move(pts)](int k) { return pts.at(static_cast<std::size_t>(k)); };
    return d;
}

IntegralResult integrate_many(const Measure& m, const VectorIntegrand& f, int count,
                              const QuadratureConfig& cfg) {
    if (cfg.nodes < 8) throw DomainError("quadrature needs at least 8 nodes");
    validate(m);
    if (const auto* d = std::get_if<Discrete>(&m.shape)) return sum_discrete(*d, f, count, cfg);
    IntegralResult r;
    r.values = reduce(nodes_at(m, cfg, 0), f, count, cfg.threads);
    for (int level = 1; level <= cfg.max_refinements; ++level) {
        std::vector<cplx> next = reduce(nodes_at(m, cfg, level), f, count, cfg.threads);
        double change = 0;
        for (int i = 0; i < count; ++i) change = std::max(change, std::abs(next[i] - r.values[i]));
        r.values = std::move(next);
        r.levels_used = level;
        r.last_change = change;
        if (finite(r.values) && change <= cfg.tol * std::max(1.0, max_abs(r.values))) return r;
    }
    throw ConvergenceError("quadrature did not converge after " + std::to_string(cfg.max_refinements) +
                           " refinements (last change " + std::to_string(r.last_change) + ")");
}

cplx integrate(const Measure& m, const PointFn& f, const QuadratureConfig& cfg) {
    return integrate_many(m, [&](cplx t, std::span<cplx> out) { out[0] = f(t); }, 1, cfg).values[0];
}

double support_distance(const Measure& m, cplx z, const QuadratureConfig& cfg) {
    return std::visit(
        [&](const auto& shape) -> double {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, CircleContour>) {
                return std::abs(std::abs(z) - shape.radius);
            } else if constexpr (std::is_same_v<T, Interval>) {
                if (z.real() >= shape.lo && z.real() <= shape.hi) return std::abs(z.imag());
                const double end = z.real() < shape.lo ? shape.lo : shape.hi;
                return std::abs(z - cplx(end, 0));
            } else if constexpr (std::is_same_v<T, VerticalLine>) {
                return std::abs(z.real() - shape.re);
            } else {
                double best = std::numeric_limits<double>::infinity();
                const int limit = shape.count >= 0 ? shape.count : cfg.tail_terms;
                for (int k = 0; k < limit; ++k) best = std::min(best, std::abs(z - shape.at(k).z));
                return best;
            }
        },
        m.shape);
}

cplx stieltjes(const Measure& m, cplx z, const QuadratureConfig& cfg) {
    if (support_distance(m, z, cfg) <= 1e-8 * std::max(1.0, std::abs(z)))
        throw SupportProximityError("Stieltjes transform requested on the support");
    return integrate(m, [z](cplx t) { return 1.0 / (z - t); }, cfg);
}

cplx normalization(const Measure& m, const QuadratureConfig& cfg) {
    return integrate(m, [](cplx) { return cplx(1.0); }, cfg);
}

CMatrix weighted_gram(const Measure& m, const Family& left, const Family& right, int N,
                      const QuadratureConfig& cfg) {
    if (N < 1) throw DomainError("Gram size must be >= 1");
    auto f = [&](cplx t, std::span<cplx> out) {
        std::vector<cplx> l(static_cast<std::size_t>(N)), r(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i) l[i] = left(i, t), r[i] = right(i, t);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) out[static_cast<std::size_t>(i) * N + j] = l[i] * r[j];
    };
    const IntegralResult res = integrate_many(m, f, N * N, cfg);
    CMatrix g(N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) g(i, j) = res.values[static_cast<std::size_t>(i) * N + j];
    return g;
}

} // namespace rfrac
