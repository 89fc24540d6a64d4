#include "rfrac/run.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <exception>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "rfrac/errors.hpp"
#include "rfrac/favard.hpp"
#include "rfrac/identities.hpp"

namespace rfrac::cli {
namespace {

std::string fmt(cplx z) {
    std::ostringstream s;
    s.precision(6);
    s << z.real();
    if (z.imag() != 0.0) s << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return s.str();
}

std::vector<cplx> points_or(const CheckContext& c, std::vector<cplx> fallback) {
    return c.cfg.at.empty() ? fallback : c.cfg.at;
}

Sample relative(std::string label, cplx computed, cplx expected) {
    return {std::move(label), computed, expected, std::max(std::abs(expected), 1e-300)};
}

// Absolute below one, relative above.
Sample floored(std::string label, cplx computed, cplx expected) {
    return {std::move(label), computed, expected, std::max(1.0, std::abs(expected))};
}

std::vector<Sample> gram_with(const CheckContext& c, bool displayed) {
    const auto f = c.model.biorth();
    const auto& norm = displayed && f.printed_norm ? f.printed_norm : f.norm;
    const auto G = weighted_gram(f.measure, f.left, f.right, c.cfg.N, c.cfg.quad);
    std::vector<Sample> out;
    for (int i = 0; i < c.cfg.N; ++i)
        for (int j = 0; j < c.cfg.N; ++j) {
            const std::string label = "G(" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (i == j)
                out.push_back(relative(label, G(i, i), norm(i)));
            else
                out.push_back({label, G(i, j), 0.0, 1.0});
        }
    return out;
}

std::vector<Sample> gram(const CheckContext& c) { return gram_with(c, false); }
std::vector<Sample> gram_displayed(const CheckContext& c) { return gram_with(c, true); }

std::vector<Sample> pincherle(const CheckContext& c) {
    const auto& spec = c.model.spec();
    std::vector<Sample> out;
    for (cplx z : points_or(c, c.model.interior_points())) {
        const auto est = minimal_solution_backward(spec, z, 3, 60);
        if (!est.valid) throw ConvergenceError("backward recurrence failed at z = " + fmt(z));
        const auto cv = convergents(spec, z, c.cfg.depth);
        out.push_back(relative("convergent " + std::to_string(c.cfg.depth) + " at z=" + fmt(z), cv.values.back(),
                               est.ratio_at_0));
        out.push_back(relative("closed form at z=" + fmt(z), c.model.cf_closed(z), est.ratio_at_0));
    }
    return out;
}

cplx s_n(const RecurrenceSpec& s, int n, cplx x) {
    cplx p = forward(s, x, n).p(n);
    for (int j = 2; j <= n + 1; ++j) p /= s.factor(j, x);
    return p;
}

std::vector<Sample> favard(const CheckContext& c) {
    const auto fn = c.model.functional(c.cfg.N + 2);
    const auto mu = c.model.spectral_measure();
    const auto& spec = c.model.spec();
    std::vector<Sample> out;
    for (int n = 0; n < c.cfg.N; ++n)
        for (int k = 0; k <= n; ++k) {
            const cplx quad =
                integrate(mu, [&](cplx x) { return std::pow(x, k) * s_n(spec, n, x); }, c.cfg.quad);
            out.push_back(floored("L[x^" + std::to_string(k) + " S_" + std::to_string(n) + "]",
                                  functional_apply(fn, XkSn{k, n}), quad));
        }
    return out;
}

std::vector<Sample> elementary(const CheckContext& c) {
    const auto& p = c.model.params();
    const auto s = elementary_integral(p.at("alpha"), p.at("delta"), c.cfg.quad);
    return {{"quadrature vs 1/(1 - alpha delta)", s.lhs, s.rhs, 1.0}};
}

std::vector<Sample> fraction_sum(const CheckContext& c) {
    std::vector<Sample> out;
    for (int n = 0; n < c.cfg.N; ++n)
        for (cplx x : points_or(c, {0.3, cplx(0.5, 0.2), -0.7, 1.5}))
            out.push_back(floored("n=" + std::to_string(n) + " x=" + fmt(x), cheby_f_sum(c.model.params(), n, x),
                                  cheby_f(c.model.params(), n, x)));
    return out;
}

template <Sides (*F)(const Params&, int, const QuadratureConfig&)>
std::vector<Sample> pastro_moments(const CheckContext& c) {
    std::vector<Sample> out;
    for (int m = 0; m < c.cfg.N; ++m) {
        const auto s = F(c.model.params(), m, c.cfg.quad);
        out.push_back(floored("m=" + std::to_string(m), s.lhs, s.rhs));
    }
    return out;
}

std::vector<Sample> pastro_circle(const CheckContext& c) {
    struct Point {
        int n, k;
        cplx z;
    };
    std::vector<Point> pts{{0, 0, 0.0}, {2, 1, 0.3}, {2, 1, 3.0}, {3, 2, cplx(-0.2, 0.1)}};
    if (!c.cfg.at.empty()) {
        pts.clear();
        for (cplx z : c.cfg.at) pts.push_back({2, 1, z});
    }
    std::vector<Sample> out;
    for (const auto& pt : pts) {
        const auto s = pastro_transform(c.model.params(), pt.n, pt.k, pt.z, c.cfg.quad);
        out.push_back(floored("n=" + std::to_string(pt.n) + " k=" + std::to_string(pt.k) + " z=" + fmt(pt.z), s.lhs,
                              s.rhs));
    }
    return out;
}

std::vector<Sample> half_line_fraction(const CheckContext& c) {
    std::vector<Sample> out;
    for (cplx z : points_or(c, {1.0})) {
        const auto s = chebyshev_cf(c.model.params(), z, c.cfg.quad);
        out.push_back(relative("z=" + fmt(z), s.lhs, s.rhs));
    }
    return out;
}

std::vector<Sample> half_line_polynomials(const CheckContext& c) {
    std::vector<Sample> out;
    for (int n = 0; n < c.cfg.N; ++n)
        for (int m = 0; m <= n; ++m) {
            const auto s = chebyshev_polynomial_gram(c.model.params(), m, n, c.cfg.quad);
            const std::string label = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            out.push_back(m == n ? relative(label, s.lhs, s.rhs) : Sample{label, s.lhs, s.rhs, 1.0});
        }
    return out;
}

std::vector<Sample> line_mass(const CheckContext& c) {
    const auto s = cauchy_kappa(c.model.params(), c.cfg.quad);
    return {relative("kappa_1", s.lhs, s.rhs)};
}

std::vector<Sample> weight_symmetry(const CheckContext& c) {
    const auto& p = c.model.params();
    Params swapped = p;
    swapped["a"] = p.at("b");
    swapped["b"] = p.at("a");
    swapped["t1"] = p.at("t2");
    swapped["t2"] = p.at("t1");
    std::mt19937_64 rng(c.cfg.seed);
    std::uniform_real_distribution<double> rad(0.8, 1.25), ang(0.0, 2 * std::numbers::pi);
    std::vector<Sample> out;
    for (int i = 0; i < 100; ++i) {
        const cplx t = std::polar(rad(rng), ang(rng));
        out.push_back(relative("t=" + fmt(t), unit_circle_weight(p, t), unit_circle_weight(swapped, 1.0 / t)));
    }
    return out;
}

template <cplx (*F)(const Params&, cplx)>
std::vector<Sample> pole_expansion(const CheckContext& c) {
    const auto mu = c.model.spectral_measure();
    std::vector<Sample> out;
    for (cplx z : points_or(c, {cplx(0.5, 1.0), cplx(-2.0, 0.3), cplx(3.0, -1.0)}))
        out.push_back(relative("z=" + fmt(z), F(c.model.params(), z), stieltjes(mu, z, c.cfg.quad)));
    return out;
}

std::vector<Sample> interval_transform(const CheckContext& c) {
    std::vector<Sample> out;
    for (cplx z : points_or(c, {1.5, cplx(0.3, 0.8), cplx(-2.0, -0.5)})) {
        const auto s = stieltjes_w87(c.model.params(), z, c.cfg.quad);
        out.push_back(relative("z=" + fmt(z), s.lhs, s.rhs));
    }
    return out;
}

std::vector<Sample> total_integral(const CheckContext& c) {
    const auto s = herglotz_value(c.model.params(), c.cfg.quad);
    return {{"quadrature vs 2phi1", s.lhs, s.rhs, 1.0}};
}

std::vector<Sample> qbeta(const CheckContext& c) {
    const auto s = qbeta_integral(c.model.params(), c.cfg.quad);
    return {{"quadrature vs closed form", s.lhs, s.rhs, 1.0}};
}

std::vector<Sample> connection(const CheckContext& c) {
    std::vector<Sample> out;
    for (cplx g : points_or(c, {0.25, -0.4})) {
        const auto s = connection_integral(c.model.params(), g, c.cfg.quad);
        out.push_back({"gamma=" + fmt(g), s.lhs, s.rhs, 1.0});
    }
    return out;
}

} // namespace

const std::vector<CheckEntry>& check_catalog() {
    static const std::vector<CheckEntry> table{
        {"gram", "Pastro21", "Eq. (2.40)", 1e-9, gram},
        {"pincherle", "Pastro21", "Eq. (2.27)", 1e-8, pincherle},
        {"favard", "Pastro21", "Theorem 2.1", 1e-7, favard},
        {"identity:2.34", "Pastro21", "Eq. (2.34)", 1e-8, pastro_moments<pastro_moment>},
        {"identity:2.36", "Pastro21", "Eq. (2.36)", 1e-8, pastro_moments<pastro_inverse_moment>},
        {"identity:2.41", "Pastro21", "Eq. (2.41)", 1e-9, pastro_circle},

        {"gram", "ChebyshevR2_31", "Eq. (3.28)", 1e-9, gram},
        {"gram:displayed", "ChebyshevR2_31", "Eq. (3.28)", 1e-9, gram_displayed},
        {"pincherle", "ChebyshevR2_31", "Eq. (3.23)", 1e-8, pincherle},
        {"favard", "ChebyshevR2_31", "Theorem 3.1", 1e-7, favard},
        {"identity:3.23", "ChebyshevR2_31", "Eq. (3.23)", 1e-10, half_line_fraction},
        {"identity:3.26", "ChebyshevR2_31", "Eq. (3.26)", 1e-9, half_line_polynomials},

        {"gram", "Cauchy2F1_32", "Eq. (3.46)", 1e-9, gram},
        {"pincherle", "Cauchy2F1_32", "Eq. (3.36)", 1e-8, pincherle},
        {"favard", "Cauchy2F1_32", "Theorem 3.1", 1e-7, favard},
        {"identity:3.42", "Cauchy2F1_32", "Eq. (3.42)", 1e-10, line_mass},

        {"gram", "UnitCircle41", "Eq. (4.26)", 1e-9, gram},
        {"pincherle", "UnitCircle41", "Eqs. (4.14)-(4.15)", 1e-8, pincherle},
        {"favard", "UnitCircle41", "Theorem 3.1", 1e-7, favard},
        {"identity:4.19", "UnitCircle41", "Eq. (4.19)", 1e-12, weight_symmetry},

        {"gram", "SinhLattice42", "Eq. (4.45)", 1e-9, gram},
        {"pincherle", "SinhLattice42", "Eq. (4.37)", 1e-8, pincherle},
        {"favard", "SinhLattice42", "Theorem 3.1", 1e-7, favard},
        {"identity:4.36", "SinhLattice42", "Eq. (4.36)", 1e-7, pole_expansion<sinh_transform_printed>},
        {"identity:4.37", "SinhLattice42", "Eq. (4.37)", 1e-7, pole_expansion<sinh_transform>},

        {"gram", "ChebyRational51", "Eq. (5.18)", 1e-9, gram},
        {"pincherle", "ChebyRational51", "Eq. (5.9)", 1e-8, pincherle},
        {"favard", "ChebyRational51", "Theorem 3.1", 1e-7, favard},
        {"identity:1.3", "ChebyRational51", "Eq. (1.3)", 1e-10, elementary},
        {"identity:1.13", "ChebyRational51", "Eq. (1.13)", 1e-11, fraction_sum},

        {"gram", "Rahman52", "Eq. (5.30)", 1e-9, gram},
        {"gram:displayed", "Rahman52", "Eq. (5.30)", 1e-9, gram_displayed},
        {"pincherle", "Rahman52", "Eq. (5.9)", 1e-8, pincherle},
        {"favard", "Rahman52", "Theorem 3.1", 1e-7, favard},
        {"identity:5.9", "Rahman52", "Eq. (5.9)", 1e-8, interval_transform},
        {"identity:5.11", "Rahman52", "Eq. (5.11)", 1e-9, total_integral},
        {"identity:5.19", "Rahman52", "Eq. (5.19)", 1e-9, qbeta},
        {"identity:5.20", "Rahman52", "Eq. (5.20)", 1e-9, connection},
    };
    return table;
}

std::string norm_anchor(const std::string& model) {
    for (const auto& e : check_catalog())
        if (e.model == model && std::string_view(e.id) == "gram") return e.anchor;
    throw ParseError("unknown model " + model);
}

std::string list_models() {
    std::ostringstream out;
    for (const auto& info : model_catalog()) {
        out << info.name << "  norm " << norm_anchor(info.name) << "  defaults";
        for (const auto& [k, v] : info.defaults) out << ' ' << k << '=' << fmt(v);
        out << "  domain: " << info.domain << '\n';
    }
    return out.str();
}

std::string list_checks() {
    std::ostringstream out;
    for (const auto& e : check_catalog()) {
        char tol[16];
        std::snprintf(tol, sizeof tol, "%.0e", e.tol);
        out << e.id << "  " << e.model << "  " << e.anchor << "  tol " << tol << '\n';
    }
    return out.str();
}

namespace {

struct Job {
    const CheckEntry* entry;
    ModelPtr model;
    std::string id;
};

const CheckEntry* find_entry(const std::string& id, const std::optional<std::string>& model) {
    const bool per_model = !id.starts_with("identity:");
    const CheckEntry* hit = nullptr;
    bool known = false;
    for (const auto& e : check_catalog()) {
        if (id != e.id) continue;
        known = true;
        if (!model || *model == e.model) {
            if (per_model && !model) break;
            hit = &e;
            break;
        }
    }
    if (!known) throw ParseError("unknown check '" + id + "'");
    if (hit) return hit;
    if (per_model && !model) throw ParseError("check '" + id + "' needs a model");
    if (per_model) throw ParseError("check '" + id + "' is not available for " + *model);
    for (const auto& e : check_catalog())
        if (id == e.id) throw ParseError("check '" + id + "' belongs to " + std::string(e.model) + ", not " + *model);
    throw ParseError("unknown check '" + id + "'");
}

Record evaluate(const Job& job, const RunConfig& cfg) {
    Record r;
    r.check = job.id;
    r.anchor = job.entry->anchor;
    r.model = job.model->name();
    const auto it = cfg.tolerance.find(job.id);
    r.tolerance = it == cfg.tolerance.end() ? job.entry->tol : it->second;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const auto samples = job.entry->run({*job.model, cfg});
        double worst = -1.0;
        r.pass = !samples.empty();
        for (const auto& s : samples) {
            const double err = std::abs(s.computed - s.expected);
            const double score = err / s.scale;
            const bool ok = std::isfinite(score) && score < r.tolerance;
            r.pass = r.pass && ok;
            if (score > worst || !std::isfinite(score)) {
                worst = std::isfinite(score) ? score : INFINITY;
                r.computed = s.computed;
                r.expected = s.expected;
                r.abs_err = err;
                r.rel_err = std::abs(s.expected) > 0.0 ? err / std::abs(s.expected) : NAN;
                r.detail = "worst of " + std::to_string(samples.size()) + ": " + s.label;
            }
        }
    } catch (const DomainError&) {
        throw;
    } catch (const Error& e) {
        r.pass = false;
        r.computed = r.expected = NAN;
        r.abs_err = r.rel_err = NAN;
        r.detail = e.what();
    }
    if (cfg.timings)
        r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace

Report run(const RunConfig& cfg) {
    validate(cfg);
    std::map<std::string, ModelPtr> models;
    std::vector<Job> jobs;
    for (const auto& id : cfg.checks) {
        const CheckEntry* e = find_entry(id, cfg.model);
        auto& m = models[e->model];
        if (!m) m = instantiate(e->model, cfg.params);
        jobs.push_back({e, m, id});
    }

    Report report(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
            try {
                report[i] = evaluate(jobs[i], cfg);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int nthreads = std::min<int>(cfg.threads, static_cast<int>(jobs.size()));
    if (nthreads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return report;
}

bool all_pass(const Report& r) {
    for (const auto& rec : r)
        if (!rec.pass) return false;
    return true;
}

} // namespace rfrac::cli
