#include "rfrac/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "rfrac/errors.hpp"

namespace rfrac::cli {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("not a number: '" + std::string(whole) + "'");
    return v;
}

template <class Int>
Int parse_int(std::string_view s, std::string_view key) {
    Int v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(std::string(key) + ": expected an integer, got '" + std::string(s) + "'");
    return v;
}

// A value is a quoted string, a bare scalar, or a one-line array of either.
struct Value {
    std::vector<std::string> items;
    bool array = false;
};

std::string unquote(std::string_view s) {
    if (s.size() < 2 || s.front() != '"' || s.back() != '"') return std::string(s);
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == '\\' && i + 2 < s.size()) ++i;
        out += s[i];
    }
    return out;
}

// Splits on commas outside quotes.
std::vector<std::string> split_items(std::string_view body) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false, any = false;
    for (std::size_t i = 0; i < body.size(); ++i) {
        const char ch = body[i];
        if (ch == '\\' && quoted && i + 1 < body.size()) {
            cur += ch;
            cur += body[++i];
            continue;
        }
        if (ch == '"') quoted = !quoted;
        if (ch == ',' && !quoted) {
            const auto t = trim(cur);
            if (t.empty()) throw ParseError("empty array element");
            out.push_back(unquote(t));
            cur.clear();
            continue;
        }
        cur += ch;
        any = true;
    }
    if (quoted) throw ParseError("unterminated string");
    const auto t = trim(cur);
    if (!t.empty()) out.push_back(unquote(t));
    else if (any && !out.empty()) throw ParseError("trailing comma");
    return out;
}

Value parse_value(std::string_view raw) {
    const auto s = trim(raw);
    if (s.empty()) throw ParseError("missing value");
    Value v;
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError("unterminated array");
        v.array = true;
        v.items = split_items(s.substr(1, s.size() - 2));
        return v;
    }
    if (s.front() == '"' && (s.size() < 2 || s.back() != '"')) throw ParseError("unterminated string");
    v.items.push_back(unquote(s));
    return v;
}

// Drops a '#' comment that is not inside a string.
std::string_view strip_comment(std::string_view line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

const std::string& scalar(const Value& v, std::string_view key) {
    if (v.array || v.items.size() != 1) throw ParseError(std::string(key) + ": expected a single value");
    return v.items.front();
}

bool parse_bool(std::string_view s, std::string_view key) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw ParseError(std::string(key) + ": expected true or false");
}

void assign(RunConfig& cfg, const std::string& section, const std::string& key, const Value& v) {
    if (section == "params") {
        cfg.params[key] = parse_complex(scalar(v, key));
        return;
    }
    if (section == "tolerance") {
        const auto& s = scalar(v, key);
        cfg.tolerance[key] = parse_real(s, s);
        return;
    }
    if (section == "quad") {
        const auto& s = scalar(v, key);
        if (key == "nodes") cfg.quad.nodes = parse_int<int>(s, key);
        else if (key == "tail_terms") cfg.quad.tail_terms = parse_int<int>(s, key);
        else if (key == "tol") cfg.quad.tol = parse_real(s, s);
        else if (key == "max_refinements") cfg.quad.max_refinements = parse_int<int>(s, key);
        else if (key == "threads") cfg.quad.threads = parse_int<int>(s, key);
        else throw ParseError("unknown key quad." + key);
        return;
    }
    if (section == "output") {
        if (key == "path") cfg.out_path = scalar(v, key);
        else if (key == "format") cfg.format = parse_format(scalar(v, key));
        else throw ParseError("unknown key output." + key);
        return;
    }
    if (!section.empty()) throw ParseError("unknown section [" + section + "]");
    if (key == "model") cfg.model = scalar(v, key);
    else if (key == "checks") cfg.checks = v.items;
    else if (key == "at") {
        cfg.at.clear();
        for (const auto& s : v.items) cfg.at.push_back(parse_complex(s));
    } else if (key == "N") cfg.N = parse_int<int>(scalar(v, key), key);
    else if (key == "seed") cfg.seed = parse_int<std::uint64_t>(scalar(v, key), key);
    else if (key == "threads") cfg.threads = parse_int<int>(scalar(v, key), key);
    else if (key == "depth") cfg.depth = parse_int<int>(scalar(v, key), key);
    else if (key == "timings") cfg.timings = parse_bool(scalar(v, key), key);
    else throw ParseError("unknown key " + key);
}

} // namespace

cplx parse_complex(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty number");
    const char last = s.back();
    if (last != 'i' && last != 'j') return parse_real(s, text);
    s.pop_back();
    // The split is the last sign that is not the leading one and not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    auto imag = [&](std::string_view t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real(t, text);
    };
    if (split == std::string::npos) return {0.0, imag(s)};
    return {parse_real(std::string_view(s).substr(0, split), text), imag(std::string_view(s).substr(split))};
}

Format parse_format(std::string_view s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw ParseError("format must be json or csv, got '" + std::string(s) + "'");
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::string section;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        try {
            const auto line = trim(strip_comment(raw));
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') throw ParseError("unterminated section header");
                section = std::string(trim(line.substr(1, line.size() - 2)));
                if (section.empty()) throw ParseError("empty section name");
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string_view::npos) throw ParseError("expected key = value");
            const std::string key = unquote(trim(line.substr(0, eq)));
            if (key.empty()) throw ParseError("empty key");
            const std::string full = section.empty() ? key : section + "." + key;
            if (!seen.insert(full).second) throw ParseError("duplicate key " + full);
            assign(cfg, section, key, parse_value(line.substr(eq + 1)));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read config " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    try {
        return parse_config(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void apply_set(RunConfig& cfg, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) throw ParseError("--set expects key=value, got '" + std::string(assignment) + "'");
    const auto key = std::string(trim(assignment.substr(0, eq)));
    if (key.empty()) throw ParseError("--set with an empty key");
    cfg.params[key] = parse_complex(assignment.substr(eq + 1));
}

void validate(const RunConfig& cfg) {
    if (cfg.N < 1) throw ParseError("N must be >= 1");
    if (cfg.checks.empty()) throw ParseError("no checks given");
    if (cfg.threads < 1) throw ParseError("threads must be >= 1");
    if (cfg.depth < 1) throw ParseError("depth must be >= 1");
    if (cfg.quad.nodes < 8) throw ParseError("quad.nodes must be >= 8");
}

} // namespace rfrac::cli
