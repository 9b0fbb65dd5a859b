#include "cli_util.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qedsat/errors.hpp"

namespace qedsat::cli {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[' && t.back() == ']') continue;  // section headers are cosmetic
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) +
                              " is not a key = value pair");
        kv[lower(trim(t.substr(0, eq)))] = trim(t.substr(eq + 1));
    }
    return kv;
}

double parse_angle(const std::string& text, const std::string& field) {
    const std::string t = lower(trim(text));
    if (t.empty()) throw ConfigError(field + ": empty angle");
    const size_t pi_pos = t.find("pi");
    if (pi_pos == std::string::npos) {
        try {
            size_t used = 0;
            const double v = std::stod(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            return v;
        } catch (const std::exception&) {
            throw ConfigError(field + ": cannot parse angle '" + text + "'");
        }
    }
    double coef = 1.0;
    const std::string before = trim(t.substr(0, pi_pos));
    if (!before.empty()) {
        if (before == "-") coef = -1.0;
        else {
            try {
                coef = std::stod(before);
            } catch (const std::exception&) {
                throw ConfigError(field + ": cannot parse angle '" + text + "'");
            }
        }
    }
    double divisor = 1.0;
    std::string after = trim(t.substr(pi_pos + 2));
    if (!after.empty()) {
        if (after.front() != '/')
            throw ConfigError(field + ": cannot parse angle '" + text + "'");
        try {
            divisor = std::stod(trim(after.substr(1)));
        } catch (const std::exception&) {
            throw ConfigError(field + ": cannot parse angle '" + text + "'");
        }
        if (divisor == 0.0) throw ConfigError(field + ": division by zero in angle");
    }
    return coef * M_PI / divisor;
}

Regime parse_regime(const std::string& text, const std::string& field) {
    const std::string t = lower(trim(text));
    if (t == "ur" || t == "inf" || t == "infinity") return Regime::ultrarelativistic();
    try {
        const double mu = std::stod(t);
        if (!(mu > 0.0)) throw ConfigError(field + ": mu must be positive, got '" + text + "'");
        return Regime::at_mu(mu);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError(field + ": expected a positive number or 'ur', got '" + text + "'");
    }
}

ProcessKind parse_process(const std::string& text, const std::string& field) {
    const std::string t = lower(trim(text));
    if (t == "bhabha") return ProcessKind::Bhabha;
    if (t == "moller" || t == "moeller") return ProcessKind::Moller;
    if (t == "annihilation" || t == "ann") return ProcessKind::Annihilation;
    if (t == "compton") return ProcessKind::Compton;
    throw ConfigError(field + ": unknown process '" + text +
                      "' (expected bhabha | moller | annihilation | compton)");
}

namespace {

Complex parse_complex(const std::string& text, const std::string& field) {
    std::string t = trim(text);
    if (t.empty()) throw ConfigError(field + ": empty amplitude");
    // forms: "1.5", "2i", "1+2i", "1-2i", "i", "-i"
    double re = 0.0, im = 0.0;
    const bool has_i = t.find('i') != std::string::npos;
    if (!has_i) {
        try {
            re = std::stod(t);
        } catch (const std::exception&) {
            throw ConfigError(field + ": cannot parse amplitude '" + text + "'");
        }
        return {re, 0.0};
    }
    // split at the sign that starts the imaginary part (if any)
    size_t split = std::string::npos;
    for (size_t k = 1; k < t.size(); ++k) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') split = k;
    }
    std::string im_part = t, re_part;
    if (split != std::string::npos && t.find('i', split) != std::string::npos) {
        re_part = t.substr(0, split);
        im_part = t.substr(split);
    }
    im_part = trim(im_part);
    if (!im_part.empty() && im_part.back() == 'i') im_part.pop_back();
    im_part = trim(im_part);
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    try {
        if (!re_part.empty()) re = std::stod(re_part);
        im = std::stod(im_part);
    } catch (const std::exception&) {
        throw ConfigError(field + ": cannot parse amplitude '" + text + "'");
    }
    return {re, im};
}

}  // namespace

PureTwoQubitState parse_initial(const std::string& text, const std::string& field) {
    const std::string t = trim(text);
    const std::string up = [&] {
        std::string u = t;
        std::transform(u.begin(), u.end(), u.begin(),
                       [](unsigned char c) { return std::toupper(c); });
        return u;
    }();
    Vector4c v = Vector4c::Zero();
    if (up == "RR" || up == "RL" || up == "LR" || up == "LL") {
        v[(up[0] == 'R' ? 0 : 2) + (up[1] == 'R' ? 0 : 1)] = 1.0;
        return normalize(v);
    }
    std::stringstream ss(t);
    std::string token;
    int idx = 0;
    while (std::getline(ss, token, ',')) {
        if (idx >= 4) throw ConfigError(field + ": expected 4 amplitudes, got more");
        v[idx++] = parse_complex(token, field);
    }
    if (idx != 4)
        throw ConfigError(field + ": expected a named state (RR/RL/LR/LL) or 4 amplitudes");
    try {
        return normalize(v);
    } catch (const ZeroVector&) {
        throw ConfigError(field + ": amplitudes are all zero");
    }
}

long parse_integer(const std::string& text, const std::string& field) {
    try {
        size_t used = 0;
        const long v = std::stol(trim(text), &used);
        if (used != trim(text).size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(field + ": cannot parse integer '" + text + "'");
    }
}

std::vector<double> parse_grid_values(const std::string& text, const std::string& field) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        token = trim(token);
        if (token.empty()) continue;
        out.push_back(parse_angle(token, field));
    }
    if (out.empty()) throw ConfigError(field + ": empty grid");
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_trajectory_csv(const std::string& path, const Trajectory& trajectory) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + path + "'");
    out << "n,theta,concurrence,re_a,im_a,re_b,im_b,re_c,im_c,re_d,im_d\n";
    for (const auto& step : trajectory.steps) {
        out << step.n << ',' << format_double(step.theta_used) << ','
            << format_double(step.concurrence);
        for (int i = 0; i < 4; ++i)
            out << ',' << format_double(step.state[i].real()) << ','
                << format_double(step.state[i].imag());
        out << '\n';
    }
}

void write_schedule_csv(const std::string& path,
                        const std::vector<std::pair<double, int>>& realized) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + path + "'");
    out << "theta,count\n";
    for (const auto& [theta, count] : realized)
        out << format_double(theta) << ',' << count << '\n';
}

void write_concurrence_svg(const std::string& path, const Trajectory& trajectory,
                           const std::string& title) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + path + "'");
    const double width = 720, height = 420;
    const double ml = 60, mr = 20, mt = 36, mb = 46;
    const double pw = width - ml - mr, ph = height - mt - mb;
    const int n_max = trajectory.steps.back().n;

    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
        << "' viewBox='0 0 " << width << " " << height << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    out << "<text x='" << width / 2 << "' y='22' text-anchor='middle' font-family='sans-serif' "
           "font-size='15'>"
        << title << "</text>\n";
    // axes
    out << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << mt + ph
        << "' stroke='black'/>\n";
    out << "<line x1='" << ml << "' y1='" << mt + ph << "' x2='" << ml + pw << "' y2='" << mt + ph
        << "' stroke='black'/>\n";
    for (double frac : {0.0, 0.5, 1.0}) {
        const double y = mt + ph * (1.0 - frac);
        out << "<text x='" << ml - 8 << "' y='" << y + 4
            << "' text-anchor='end' font-family='sans-serif' font-size='11'>" << frac
            << "</text>\n";
        out << "<line x1='" << ml - 4 << "' y1='" << y << "' x2='" << ml << "' y2='" << y
            << "' stroke='black'/>\n";
    }
    out << "<text x='" << ml + pw / 2 << "' y='" << height - 10
        << "' text-anchor='middle' font-family='sans-serif' font-size='12'>n</text>\n";
    out << "<text x='16' y='" << mt + ph / 2
        << "' font-family='sans-serif' font-size='12' transform='rotate(-90 16 " << mt + ph / 2
        << ")' text-anchor='middle'>concurrence</text>\n";
    out << "<polyline fill='none' stroke='#1f77b4' stroke-width='1.5' points='";
    for (const auto& step : trajectory.steps) {
        const double x = ml + (n_max > 0 ? pw * step.n / n_max : 0.0);
        const double y = mt + ph * (1.0 - step.concurrence);
        out << x << ',' << y << ' ';
    }
    out << "'/>\n</svg>\n";
}

}  // namespace qedsat::cli
