#include "rfrac/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace rfrac::cli {
namespace {

std::string num(double x, const char* non_finite) {
    if (!std::isfinite(x)) return non_finite;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

std::string json_complex(cplx z) {
    return "{\"re\": " + num(z.real(), "null") + ", \"im\": " + num(z.imag(), "null") + "}";
}

} // namespace

std::string to_json(const Report& r) {
    std::string out = "[";
    for (std::size_t i = 0; i < r.size(); ++i) {
        const auto& x = r[i];
        out += i ? ",\n  {" : "\n  {";
        out += "\"check\": " + quoted(x.check);
        out += ", \"anchor\": " + quoted(x.anchor);
        out += ", \"model\": " + quoted(x.model);
        out += ", \"computed\": " + json_complex(x.computed);
        out += ", \"expected\": " + json_complex(x.expected);
        out += ", \"abs_err\": " + num(x.abs_err, "null");
        out += ", \"rel_err\": " + num(x.rel_err, "null");
        out += ", \"tolerance\": " + num(x.tolerance, "null");
        out += std::string(", \"pass\": ") + (x.pass ? "true" : "false");
        out += ", \"runtime_ms\": " + (x.runtime_ms ? num(*x.runtime_ms, "null") : std::string("null"));
        out += ", \"detail\": " + quoted(x.detail);
        out += "}";
    }
    out += r.empty() ? "]\n" : "\n]\n";
    return out;
}

std::string to_csv(const Report& r) {
    std::string out =
        "check,anchor,model,computed_re,computed_im,expected_re,expected_im,abs_err,rel_err,tolerance,pass,"
        "runtime_ms,detail\n";
    for (const auto& x : r) {
        out += csv_field(x.check) + ',' + csv_field(x.anchor) + ',' + csv_field(x.model) + ',';
        out += num(x.computed.real(), "nan") + ',' + num(x.computed.imag(), "nan") + ',';
        out += num(x.expected.real(), "nan") + ',' + num(x.expected.imag(), "nan") + ',';
        out += num(x.abs_err, "nan") + ',' + num(x.rel_err, "nan") + ',' + num(x.tolerance, "nan") + ',';
        out += std::string(x.pass ? "true" : "false") + ',';
        out += (x.runtime_ms ? num(*x.runtime_ms, "nan") : std::string()) + ',';
        out += csv_field(x.detail) + '\n';
    }
    return out;
}

std::string render(const Report& r, Format f) { return f == Format::Json ? to_json(r) : to_csv(r); }

} // namespace rfrac::cli
