#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rfrac/measures.hpp"
#include "rfrac/models.hpp"

namespace rfrac::cli {

enum class Format { Json, Csv };

struct RunConfig {
    std::optional<std::string> model;
    Params params;  // overrides on top of the catalog defaults
    std::vector<std::string> checks;
    QuadratureConfig quad;
    int N = 4;
    std::uint64_t seed = 0;
    int threads = 1;
    int depth = 200;        // convergent index for pincherle
    std::vector<cplx> at;   // evaluation points for identity checks; empty means the defaults
    std::map<std::string, double> tolerance;  // per check id
    std::string out_path;   // empty: stdout
    Format format = Format::Json;
    bool timings = false;
};

// "1.5", "-2e-3", "0.3+0.2i", "-i", "4j". Throws ParseError.
cplx parse_complex(std::string_view text);

// Grammar in README.md. Errors carry the line number.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

// "key=value" from --set.
void apply_set(RunConfig& cfg, std::string_view assignment);
Format parse_format(std::string_view s);

// N >= 1, checks nonempty, threads >= 1.
void validate(const RunConfig& cfg);

} // namespace rfrac::cli
