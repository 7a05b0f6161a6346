// config.cpp

#include "degjc/config.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

namespace degjc::cli {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

double parse_real(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw ConfigError("cannot parse " + what + " from '" + text + "'");
    }
    if (used != t.size() || !std::isfinite(v)) throw ConfigError("cannot parse " + what + " from '" + text + "'");
    return v;
}

int parse_int(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(t, &used);
    } catch (const std::exception&) {
        throw ConfigError("cannot parse " + what + " from '" + text + "'");
    }
    if (used != t.size() || v < -1'000'000'000L || v > 1'000'000'000L)
        throw ConfigError("cannot parse " + what + " from '" + text + "'");
    return static_cast<int>(v);
}

bool parse_bool(const std::string& text) {
    const std::string t = trim(text);
    if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
    if (t == "false" || t == "0" || t == "no" || t == "off") return false;
    throw ConfigError("cannot parse boolean from '" + text + "'");
}

// "key=value" after a class prefix, e.g. "alpha=1,2".
std::string field_argument(const std::string& body, const std::string& key, const std::string& text) {
    const std::string prefix = key + "=";
    if (body.rfind(prefix, 0) != 0) throw ConfigError("field '" + text + "' expects '" + prefix + "...'");
    return body.substr(prefix.size());
}

}  // namespace

std::string to_string(Scenario s) {
    switch (s) {
    case Scenario::Envelope: return "envelope";
    case Scenario::ConcurrenceSweep: return "concurrence-sweep";
    case Scenario::BetaSweep: return "beta-sweep";
    case Scenario::Esd: return "esd";
    case Scenario::Separability: return "separability";
    case Scenario::Validate: return "validate";
    }
    return "?";
}

Scenario parse_scenario(const std::string& text) {
    for (Scenario s : {Scenario::Envelope, Scenario::ConcurrenceSweep, Scenario::BetaSweep, Scenario::Esd,
                       Scenario::Separability, Scenario::Validate})
        if (to_string(s) == trim(text)) return s;
    throw ConfigError("unknown scenario '" + text + "'");
}

FieldSpec parse_field(const std::string& text) {
    const std::string t = trim(text);
    const auto colon = t.find(':');
    const std::string kind = t.substr(0, colon);
    const std::string body = colon == std::string::npos ? std::string() : t.substr(colon + 1);
    try {
        if (kind == "vacuum" && body.empty()) return FieldSpec::vacuum();
        if (kind == "coherent") {
            const auto parts = split(field_argument(body, "alpha", text), ',');
            if (parts.size() > 2) throw ConfigError("coherent amplitude takes RE[,IM], got '" + text + "'");
            const double re = parse_real(parts[0], "coherent amplitude");
            const double im = parts.size() == 2 ? parse_real(parts[1], "coherent amplitude") : 0.0;
            return FieldSpec::coherent({re, im});
        }
        if (kind == "number") return FieldSpec::number(parse_int(field_argument(body, "n", text), "number state N"));
        if (kind == "thermal") return FieldSpec::thermal(parse_real(field_argument(body, "nbar", text), "thermal nbar"));
    } catch (const InvalidInput& e) {
        throw ConfigError(std::string("invalid field '") + text + "': " + e.what());
    }
    throw ConfigError("unknown field '" + text + "' (vacuum | coherent:alpha=RE,IM | number:n=K | thermal:nbar=F)");
}

QubitInput parse_bell(const std::string& text) {
    const std::string t = trim(text);
    if (t == "esd-mixture") return std::nullopt;
    for (BellState b : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus})
        if (degjc::to_string(b) == t) return b;
    throw ConfigError("unknown qubit state '" + text + "' (phi+ | phi- | psi+ | psi- | esd-mixture)");
}

std::string bell_text(const QubitInput& q) {
    return q ? degjc::to_string(*q) : std::string("esd-mixture");
}

void ScenarioConfig::validate() const {
    if (steps && *steps < 2) throw ConfigError("steps must be >= 2");
    if (omega_t_max && !(*omega_t_max > 0.0)) throw ConfigError("omega-t-max must be > 0");
    if (tolerance && !(*tolerance > 0.0)) throw ConfigError("tolerance must be > 0");
    if (omega && !(*omega > 0.0)) throw ConfigError("omega must be > 0");
    if (omega0 < 0.0) throw ConfigError("omega0 must be >= 0");
    if (ncut && *ncut < 1) throw ConfigError("ncut must be >= 1");
    if (!(tail_tol > 0.0)) throw ConfigError("tail-tol must be > 0");
    for (double b : betas)
        if (b < 0.0) throw ConfigError("beta must be >= 0");
}

std::vector<std::string> ScenarioConfig::echo() const {
    std::vector<std::string> lines;
    lines.push_back("scenario=" + to_string(scenario));
    std::string b;
    for (std::size_t i = 0; i < betas.size(); ++i) b += (i ? "," : "") + format_real(betas[i]);
    lines.push_back("beta=" + (betas.empty() ? std::string("default") : b));
    std::string f;
    for (std::size_t i = 0; i < fields.size(); ++i) f += (i ? ";" : "") + fields[i].describe();
    lines.push_back("field=" + (fields.empty() ? std::string("default") : f));
    lines.push_back("bell=" + (bell ? bell_text(*bell) : std::string("default")));
    lines.push_back("omega=" + (omega ? format_real(*omega) : std::string("unset")));
    lines.push_back("omega0=" + format_real(omega0));
    lines.push_back("omega-t-max=" + (omega_t_max ? format_real(*omega_t_max) : std::string("default")));
    lines.push_back("steps=" + (steps ? std::to_string(*steps) : std::string("default")));
    lines.push_back("ncut=" + (ncut ? std::to_string(*ncut) : std::string("auto")));
    lines.push_back("tail-tol=" + format_real(tail_tol));
    lines.push_back(std::string("compare-oracle=") + (compare_oracle ? "true" : "false"));
    lines.push_back("tolerance=" + (tolerance ? format_real(*tolerance) : std::string("default")));
    return lines;
}

void apply_setting(ScenarioConfig& cfg, const std::string& raw_key, const std::string& value) {
    const std::string key = trim(raw_key);
    if (key == "scenario") {
        cfg.scenario = parse_scenario(value);
    } else if (key == "beta") {
        cfg.betas.clear();
        for (const auto& part : split(value, ',')) cfg.betas.push_back(parse_real(part, "beta"));
    } else if (key == "field") {
        cfg.fields.clear();
        for (const auto& part : split(value, ';'))
            if (!part.empty()) cfg.fields.push_back(parse_field(part));
    } else if (key == "bell") {
        cfg.bell = parse_bell(value);
    } else if (key == "omega") {
        cfg.omega = parse_real(value, "omega");
    } else if (key == "omega0") {
        cfg.omega0 = parse_real(value, "omega0");
    } else if (key == "omega-t-max") {
        cfg.omega_t_max = parse_real(value, "omega-t-max");
    } else if (key == "steps") {
        cfg.steps = parse_int(value, "steps");
    } else if (key == "ncut") {
        cfg.ncut = parse_int(value, "ncut");
    } else if (key == "tail-tol") {
        cfg.tail_tol = parse_real(value, "tail-tol");
    } else if (key == "compare-oracle") {
        cfg.compare_oracle = parse_bool(value);
    } else if (key == "tolerance") {
        cfg.tolerance = parse_real(value, "tolerance");
    } else if (key == "out") {
        cfg.out = trim(value);
    } else {
        throw ConfigError("unknown setting '" + key + "'");
    }
}

std::vector<std::pair<std::string, std::string>> parse_config_text(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value, got '" + t + "'");
        out.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return out;
}

std::string format_real(double x) {
    if (x == 0.0) return "0";  // folds -0 into 0
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);  // shortest form that round-trips
    return std::string(buf, res.ptr);
}

void Table::write(std::ostream& os) const {
    auto cell = [&os](const std::string& c) {
        if (c.find_first_of(",\"") == std::string::npos) {
            os << c;
            return;
        }
        os << '"';
        for (char ch : c) os << (ch == '"' ? "\"\"" : std::string(1, ch));
        os << '"';
    };
    for (const auto& m : metadata) os << "# " << m << '\n';
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) os << ',';
        cell(header[i]);
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            cell(row[i]);
        }
        os << '\n';
    }
}

}  // namespace degjc::cli
