#include <algorithm>

#include "common.hpp"

namespace rfrac {

cplx coordinate_forward(Coordinate c, cplx w) {
    switch (c) {
    case Coordinate::Plain: return w;
    case Coordinate::Joukowski: return (w + 1.0 / w) / 2.0;
    case Coordinate::Sinh: return (w - 1.0 / w) / 2.0;
    }
    return w;
}

cplx coordinate_inverse(Coordinate c, cplx z) {
    switch (c) {
    case Coordinate::Plain: return z;
    case Coordinate::Joukowski: return detail::joukowski_outer(z);
    case Coordinate::Sinh: return z + std::sqrt(z * z + 1.0);
    }
    return z;
}

MomentFunctional Model::functional(int nmax) const {
    if (spec_.kind == FractionKind::RI) return build_RI(spec_, nmax, cplx(1.0));
    return build_RII_integral(spec_, nmax);
}

std::vector<cplx> Model::minimal_sequence(cplx z, int first, int last) const {
    std::vector<cplx> x;
    x.reserve(static_cast<std::size_t>(std::max(0, last - first + 1)));
    for (int n = first; n <= last; ++n) x.push_back(minimal_closed_form(n, z));
    return x;
}

ConsistencyReport check_consistency(const Model& m, const RecurrenceSpec& spec,
                                    std::span<const cplx> points, int nmax, double tol) {
    ConsistencyReport rep;
    for (cplx z : points) {
        const auto x = m.minimal_sequence(z, 0, nmax);
        for (int n = 2; n <= nmax; ++n) {
            const auto i = static_cast<std::size_t>(n);
            const double d = recurrence_defect(spec, z, {x[i - 2], x[i - 1], x[i]}, n - 2);
            rep.max_defect = std::max(rep.max_defect, d);
            if (!(d <= tol)) {
                rep.consistent = false;
                if (rep.first_failure < 0 || n < rep.first_failure) rep.first_failure = n;
            }
        }
    }
    return rep;
}

namespace detail {

cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z) {
    const cplx w = z / (z - 1.0);
    if (std::abs(z) <= std::abs(w)) return f21_value(a, b, c, z);
    return std::pow(1.0 - z, -a) * f21_value(a, c - b, c, w);
}

cplx joukowski_outer(cplx z) {
    cplx u = z + std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
    const double r = std::abs(u);
    if (std::abs(r - 1.0) < 1e-12) throw BranchBoundaryError("z lies on the cut [-1, 1]");
    return r < 1.0 ? 1.0 / u : u;
}

namespace {

using Factory = ModelPtr (*)(const Params&);

struct Entry {
    ModelInfo info;
    Factory make;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"Pastro21", {{"q", 0.5}, {"a", 0.3}, {"b", 0.4}}, "0 < |q| < 1, |a q| < 1, 0 < |b| < 1, a != 0; |a| < 1 for the biorthogonal pair"},
         make_pastro},
        {{"ChebyshevR2_31", {{"a", 1.0}, {"b", 4.0}}, "a, b real and > 0"}, make_chebyshev_r2},
        {{"Cauchy2F1_32", {{"a", 1.5}, {"b", -0.5}}, "a, b != 0, a != -1, b != 1, Re(a - b) > 0"}, make_cauchy},
        {{"UnitCircle41", {{"q", 0.5}, {"a", 0.3}, {"b", 0.2}, {"t1", 0.3}, {"t2", 0.3}},
          "0 < |q| < 1, 0 < |a|, |b| < 1, 0 < |t1|, |t2| < |q|^(1/2)"},
         make_unit_circle},
        {{"SinhLattice42", {{"q", 0.5}, {"t1", 0.2}, {"t2", 0.3}, {"t3", 0.4}, {"t4", 0.1}, {"cosh", 0.0}},
          "0 < |q| < 1, t1..t4 != 0, |t1 t2 t3 t4| < |q|^3; cosh = 1 selects the z = cosh(xi) lattice"},
         make_sinh_lattice},
        {{"ChebyRational51", {{"q", 0.5}, {"alpha", 0.3}, {"delta", 0.2}},
          "0 < |q| < 1, max(|alpha|, |delta|) < 1; the recurrence needs alpha delta != 0"},
         make_cheby_rational},
        {{"Rahman52", {{"q", 0.5}, {"alpha", 0.2}, {"beta", 0.3}, {"delta", 0.1}},
          "0 < |q| < 1, max(|alpha|, |beta|, |delta|) < 1, beta != 0; the recurrence needs alpha delta != 0"},
         make_rahman},
    };
    return table;
}

const Entry& find(std::string_view name) {
    for (const auto& e : entries())
        if (e.info.name == name) return e;
    throw ParseError("unknown model '" + std::string(name) + "'");
}

Params merge(const Entry& e, const Params& overrides) {
    Params p = e.info.defaults;
    for (const auto& [k, v] : overrides) {
        if (!p.contains(k))
            throw ParseError("model " + e.info.name + " has no parameter '" + k + "'");
        p[k] = v;
    }
    return p;
}

} // namespace

Params resolve(std::string_view name, const Params& p) {
    return instantiate(name, p)->params();
}

} // namespace detail

const std::vector<ModelInfo>& model_catalog() {
    static const std::vector<ModelInfo> infos = [] {
        std::vector<ModelInfo> v;
        for (const auto& e : detail::entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

ModelPtr instantiate(std::string_view name, const Params& overrides) {
    const auto& e = detail::find(name);
    return e.make(detail::merge(e, overrides));
}

} // namespace rfrac
