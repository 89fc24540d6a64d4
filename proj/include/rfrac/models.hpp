#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rfrac/favard.hpp"
#include "rfrac/measures.hpp"
#include "rfrac/recurrence.hpp"

namespace rfrac {

using Params = std::map<std::string, cplx>;

// Plain: z itself. Joukowski: z = (u + 1/u)/2. Sinh: z = (E - 1/E)/2, i.e. E = e^xi for z = sinh xi.
enum class Coordinate { Plain, Joukowski, Sinh };

cplx coordinate_forward(Coordinate c, cplx w);
// Joukowski picks |u| >= 1; Sinh picks E = z + sqrt(z^2 + 1).
cplx coordinate_inverse(Coordinate c, cplx z);

struct BiorthFamily {
    Family left;
    Family right;
    std::function<cplx(int)> norm;
    std::function<cplx(int)> printed_norm;  // set only where the displayed norm differs
    Measure measure;
    std::string validity;
};

class Model {
public:
    Model(std::string name, Params params, RecurrenceSpec spec, Coordinate coord)
        : name_(std::move(name)), params_(std::move(params)), spec_(std::move(spec)), coord_(coord) {}
    virtual ~Model() = default;

    const std::string& name() const { return name_; }
    const Params& params() const { return params_; }
    cplx param(const std::string& key) const { return params_.at(key); }
    const RecurrenceSpec& spec() const { return spec_; }
    Coordinate coordinate() const { return coord_; }

    // Stieltjes measure of the fraction: its transform is cf_closed off the support.
    virtual Measure spectral_measure() const = 0;
    virtual cplx cf_closed(cplx z) const = 0;
    // Throws BranchBoundaryError on the line or circle separating the two branches.
    virtual cplx minimal_closed_form(int n, cplx z) const = 0;
    virtual BiorthFamily biorth() const = 0;
    // Generic points off the support, covering every branch.
    virtual std::vector<cplx> interior_points() const = 0;
    // Coefficients exactly as displayed, where they differ from the ones in spec().
    virtual std::optional<RecurrenceSpec> printed_spec() const { return std::nullopt; }

    // R_I: L[1] = 1. R_II: N_0 = kappa_1, matching spectral_measure().
    MomentFunctional functional(int nmax = 16) const;

    std::vector<cplx> minimal_sequence(cplx z, int first, int last) const;

private:
    std::string name_;
    Params params_;
    RecurrenceSpec spec_;
    Coordinate coord_;
};

using ModelPtr = std::shared_ptr<const Model>;

struct ModelInfo {
    std::string name;
    Params defaults;
    std::string domain;
};

const std::vector<ModelInfo>& model_catalog();

// Unknown model or parameter: ParseError. Parameters outside the domain: DomainError.
ModelPtr instantiate(std::string_view name, const Params& overrides = {});

struct ConsistencyReport {
    bool consistent = true;
    int first_failure = -1;  // smallest n whose relation fails, -1 if none
    double max_defect = 0.0;
};

// Substitutes the model's closed-form minimal solution into `spec` for n <= nmax.
ConsistencyReport check_consistency(const Model& m, const RecurrenceSpec& spec,
                                    std::span<const cplx> points, int nmax = 20,
                                    double tol = 1e-10);

} // namespace rfrac
