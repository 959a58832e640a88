#include "qqdyn/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qqdyn/dynamics.hpp"
#include "qqdyn/rng.hpp"

namespace qqdyn {

namespace {

constexpr double PI = 3.14159265358979323846;
constexpr double TWO_PI = 2.0 * PI;

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double_token(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("bad number '" + text + "'");
    return value;
}

int parse_int_token(const std::string& text) {
    int value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("bad integer '" + text + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.')
            return false;
    return true;
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) return format_double(z.real());
    const std::string im = format_double(z.imag()) + "i";
    if (z.real() == 0.0) return im;
    return format_double(z.real()) + (z.imag() < 0.0 ? "" : "+") + im;
}

Complex parse_complex(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i') return Complex(parse_double_token(s), 0.0);

    const std::string body = s.substr(0, s.size() - 1);
    // split at the sign of the imaginary part, skipping exponent signs
    std::size_t cut = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    auto imag_part = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_double_token(t);
    };
    if (cut == std::string::npos) return Complex(0.0, imag_part(body));
    return Complex(parse_double_token(body.substr(0, cut)), imag_part(body.substr(cut)));
}

bool is_preset_name(std::string_view name) {
    return name == "fig1" || name == "fig2" || name == "fig3" || name == "fig4" ||
           name == "fig5";
}

ScenarioConfig preset_config(ScenarioId id) {
    ScenarioConfig cfg;
    cfg.name = to_string(id);
    cfg.params = scenario_parameters(id);
    cfg.theta = PI / 4.0;
    cfg.phi = 0.0;
    if (id == ScenarioId::Fig5) {
        cfg.alpha_values = {Complex(1.0)};
        cfg.dz_values = {0.1, 5.0, 10.0};
    } else {
        cfg.alpha_values = {Complex(1.0), Complex(2.0), Complex(3.0)};
    }
    return cfg;
}

ScenarioConfig parse_config(std::istream& in, const std::string& name) {
    ScenarioConfig cfg;
    cfg.name = name;
    std::set<std::string> seen;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (const std::size_t hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        const std::size_t key_col = line.find_first_not_of(" \t") + 1;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", lineno, static_cast<int>(key_col));

        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        std::size_t value_col = line.find_first_not_of(" \t", eq + 1);
        if (value_col == std::string::npos) value_col = eq + 1;
        ++value_col;

        if (key.empty())
            throw ParseError("missing key before '='", lineno, static_cast<int>(key_col));
        if (!seen.insert(key).second)
            throw ParseError("duplicate key '" + key + "'", lineno,
                             static_cast<int>(key_col));

        auto fail = [&](const std::string& what) -> ParseError {
            return ParseError(what, lineno, static_cast<int>(value_col));
        };
        auto number = [&](const std::string& t) {
            try {
                return parse_double_token(t);
            } catch (const std::invalid_argument& e) {
                throw fail(e.what());
            }
        };

        try {
            if (key == "name") {
                if (!valid_name(value)) throw fail("invalid name '" + value + "'");
                cfg.name = value;
            } else if (key == "jx") cfg.params.jx = number(value);
            else if (key == "jy") cfg.params.jy = number(value);
            else if (key == "jz") cfg.params.jz = number(value);
            else if (key == "dx") cfg.params.dx = number(value);
            else if (key == "dy") cfg.params.dy = number(value);
            else if (key == "dz") cfg.params.dz = number(value);
            else if (key == "bza") cfg.params.bza = number(value);
            else if (key == "bzb") cfg.params.bzb = number(value);
            else if (key == "theta") cfg.theta = number(value);
            else if (key == "phi") cfg.phi = number(value);
            else if (key == "t_max") cfg.t_max = number(value);
            else if (key == "n_steps") cfg.n_steps = parse_int_token(value);
            else if (key == "alpha_values") {
                cfg.alpha_values.clear();
                if (!value.empty())
                    for (const std::string& item : split(value, ','))
                        cfg.alpha_values.push_back(parse_complex(item));
            } else if (key == "dz_values") {
                cfg.dz_values.clear();
                if (!value.empty())
                    for (const std::string& item : split(value, ','))
                        cfg.dz_values.push_back(parse_double_token(trim(item)));
            } else if (key == "windows") {
                cfg.windows.clear();
                if (!value.empty())
                    for (const std::string& item : split(value, ',')) {
                        const auto parts = split(trim(item), ':');
                        if (parts.size() != 2)
                            throw fail("window must be 'lo:hi', got '" + trim(item) + "'");
                        cfg.windows.push_back(
                            {parse_double_token(trim(parts[0])),
                             parse_double_token(trim(parts[1]))});
                    }
            } else if (key == "subsystem") {
                if (value == "a") cfg.subsystem = Subsystem::QubitA;
                else if (value == "b") cfg.subsystem = Subsystem::QubitB;
                else throw fail("subsystem must be 'a' or 'b'");
            } else if (key == "format") {
                if (value == "csv") cfg.format = OutputFormat::Csv;
                else if (value == "json") cfg.format = OutputFormat::Json;
                else throw fail("format must be 'csv' or 'json'");
            } else {
                throw ParseError("unknown key '" + key + "'", lineno,
                                 static_cast<int>(key_col));
            }
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path_or_preset) {
    if (is_preset_name(path_or_preset))
        return preset_config(parse_scenario_id(path_or_preset));
    std::ifstream in(path_or_preset);
    if (!in)
        throw UnknownPresetError("'" + path_or_preset +
                                 "' is neither a preset (fig1..fig5) nor a readable file");
    std::string stem = std::filesystem::path(path_or_preset).stem().string();
    if (!valid_name(stem)) stem = "custom";
    return parse_config(in, stem);
}

void write_config(const ScenarioConfig& c, std::ostream& out) {
    auto join_complex = [](const std::vector<Complex>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i)
            s += (i ? ", " : "") + format_complex(xs[i]);
        return s;
    };
    auto join_double = [](const std::vector<double>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i)
            s += (i ? ", " : "") + format_double(xs[i]);
        return s;
    };
    auto join_windows = [](const std::vector<Window>& ws) {
        std::string s;
        for (std::size_t i = 0; i < ws.size(); ++i)
            s += (i ? ", " : "") + format_double(ws[i].lo) + ":" + format_double(ws[i].hi);
        return s;
    };

    out << "name = " << c.name << "\n";
    out << "jx = " << format_double(c.params.jx) << "\n";
    out << "jy = " << format_double(c.params.jy) << "\n";
    out << "jz = " << format_double(c.params.jz) << "\n";
    out << "dx = " << format_double(c.params.dx) << "\n";
    out << "dy = " << format_double(c.params.dy) << "\n";
    out << "dz = " << format_double(c.params.dz) << "\n";
    out << "bza = " << format_double(c.params.bza) << "\n";
    out << "bzb = " << format_double(c.params.bzb) << "\n";
    out << "theta = " << format_double(c.theta) << "\n";
    out << "phi = " << format_double(c.phi) << "\n";
    out << "alpha_values = " << join_complex(c.alpha_values) << "\n";
    out << "dz_values = " << join_double(c.dz_values) << "\n";
    out << "t_max = " << format_double(c.t_max) << "\n";
    out << "n_steps = " << c.n_steps << "\n";
    out << "windows = " << join_windows(c.windows) << "\n";
    out << "subsystem = " << (c.subsystem == Subsystem::QubitA ? "a" : "b") << "\n";
    out << "format = " << (c.format == OutputFormat::Csv ? "csv" : "json") << "\n";
}

void validate_config(const ScenarioConfig& c) {
    if (!valid_name(c.name)) throw Error("config name is empty or not filename-safe");
    for (double x : {c.params.jx, c.params.jy, c.params.jz, c.params.dx, c.params.dy,
                     c.params.dz, c.params.bza, c.params.bzb})
        if (!std::isfinite(x)) throw Error("non-finite spin parameter");
    if (c.alpha_values.empty() && c.dz_values.empty())
        throw Error("at least one of alpha_values / dz_values must be non-empty");
    if (c.alpha_values.empty())
        throw Error("alpha_values must hold the fixed alpha for a dz sweep");
    for (Complex a : c.alpha_values)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw Error("non-finite alpha value");
    for (double d : c.dz_values)
        if (!std::isfinite(d)) throw Error("non-finite dz value");
    if (!(c.theta >= 0.0 && c.theta < TWO_PI)) throw Error("theta must lie in [0, 2*pi)");
    if (!(c.phi >= 0.0 && c.phi < TWO_PI)) throw Error("phi must lie in [0, 2*pi)");
    if (!(c.t_max > 0.0)) throw Error("t_max must be positive");
    if (c.n_steps < 2) throw Error("n_steps must be at least 2");
    if (c.windows.empty()) throw Error("at least one averaging window is required");
    for (const Window& w : c.windows)
        if (!(w.lo >= 0.0 && w.lo < w.hi) || !std::isfinite(w.hi))
            throw Error("window bounds must satisfy 0 <= lo < hi");
}

namespace {

nlohmann::ordered_json json_value(Complex z) {
    if (z.imag() == 0.0) return z.real();
    return format_complex(z);
}

void write_text_file(const std::filesystem::path& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw Error("cannot open " + file.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw Error("write failed for " + file.string());
}

std::string render_csv(const NegativitySeries& s) {
    std::string text = "t,negativity\n";
    for (std::size_t k = 0; k < s.times.size(); ++k) {
        text += fmt17(s.times[k]);
        text += ',';
        text += fmt17(s.values[k]);
        text += '\n';
    }
    return text;
}

std::string render_json_series(const std::string& scenario, const std::string& param,
                               Complex value, const NegativitySeries& s) {
    nlohmann::ordered_json j;
    j["scenario"] = scenario;
    j["param"] = param;
    j["value"] = json_value(value);
    j["t"] = s.times;
    j["negativity"] = s.values;
    return j.dump(2) + "\n";
}

}  // namespace

ScenarioReport run_scenario(const ScenarioConfig& config,
                            const std::filesystem::path& out_dir) {
    validate_config(config);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw Error("cannot create output directory " + out_dir.string() + ": " +
                    ec.message());

    const bool dz_sweep = !config.dz_values.empty();
    const std::string param = dz_sweep ? "dz" : "alpha";
    const std::size_t n_sweeps =
        dz_sweep ? config.dz_values.size() : config.alpha_values.size();

    ScenarioReport report{config, {}, {}};
    for (std::size_t si = 0; si < n_sweeps; ++si) {
        SpinParameters p = config.params;
        Complex alpha = config.alpha_values.front();
        Complex sweep_value;
        if (dz_sweep) {
            p.dz = config.dz_values[si];
            sweep_value = Complex(p.dz);
        } else {
            alpha = config.alpha_values[si];
            sweep_value = alpha;
        }
        const InitialStateSpec spec{alpha, alpha, -alpha, -alpha,
                                    config.theta, config.phi, std::nullopt};

        // One grid per distinct end time: the emitted file uses t_max and
        // each window [lo, hi] is averaged on its own grid ending at hi.
        std::map<double, NegativitySeries> by_end;
        auto series_for = [&](double hi) -> const NegativitySeries& {
            auto it = by_end.find(hi);
            if (it == by_end.end())
                it = by_end
                         .emplace(hi, negativity_series(p, spec, hi, config.n_steps,
                                                        config.subsystem))
                         .first;
            return it->second;
        };

        const NegativitySeries& emitted = series_for(config.t_max);
        const std::string value_text =
            dz_sweep ? format_double(p.dz) : format_complex(alpha);
        const bool csv = config.format == OutputFormat::Csv;
        const std::filesystem::path file =
            out_dir / (config.name + "_" + param + "=" + value_text +
                       (csv ? ".csv" : ".json"));
        write_text_file(file, csv ? render_csv(emitted)
                                  : render_json_series(config.name, param,
                                                       sweep_value, emitted));

        SweepResult result{param, sweep_value, file, {}};
        for (const Window& w : config.windows)
            result.window_averages.push_back(time_average(series_for(w.hi), w.lo, w.hi));
        report.sweeps.push_back(std::move(result));
    }

    nlohmann::ordered_json summary;
    summary["scenario"] = config.name;
    summary["subsystem"] = config.subsystem == Subsystem::QubitA ? "a" : "b";
    summary["windows"] = nlohmann::ordered_json::array();
    for (std::size_t wi = 0; wi < config.windows.size(); ++wi) {
        nlohmann::ordered_json w;
        w["t_lo"] = config.windows[wi].lo;
        w["t_hi"] = config.windows[wi].hi;
        w["averages"] = nlohmann::ordered_json::array();
        for (const SweepResult& r : report.sweeps) {
            nlohmann::ordered_json entry;
            entry["param"] = r.param;
            entry["value"] = json_value(r.value);
            entry["average"] = r.window_averages[wi];
            w["averages"].push_back(std::move(entry));
        }
        summary["windows"].push_back(std::move(w));
    }
    report.summary_file = out_dir / (config.name + "_summary.json");
    write_text_file(report.summary_file, summary.dump(2) + "\n");
    return report;
}

ClosedFormComparison compare_closed_form(ScenarioId id, double dz, int n_samples,
                                         double t_hi, double gate) {
    const Propagator prop(build_hamiltonian_sum(scenario_parameters(id, dz)));
    SplitMix64 rng(20240711ull);

    ClosedFormComparison out{id, dz, 0.0, {}, {}};
    out.entry_deviation.fill(0.0);
    for (int s = 0; s < n_samples; ++s) {
        const double t = rng.uniform(0.0, t_hi);
        const ComplexMatrix u_cf = closed_form_propagator(id, t, dz);
        const ComplexMatrix u_num = prop.at(t);
        out.unitarity_defect = std::max(out.unitarity_defect, unitarity_defect(u_cf));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                double& dev = out.entry_deviation[static_cast<std::size_t>(4 * r + c)];
                dev = std::max(dev, std::abs(u_cf(r, c) - u_num(r, c)));
            }
    }
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (out.entry_deviation[static_cast<std::size_t>(4 * r + c)] > gate)
                out.failing.emplace_back(r, c);
    return out;
}

std::vector<ClosedFormComparison> run_oracle(ScenarioId id) {
    if (id == ScenarioId::Fig5)
        return {compare_closed_form(id, 0.1), compare_closed_form(id, 5.0),
                compare_closed_form(id, 10.0)};
    return {compare_closed_form(id)};
}

const std::vector<std::pair<int, int>>& known_closed_form_defects(ScenarioId id) {
    // fig2: the transcription repeats the fig1 matrix, so every nonzero
    // entry disagrees with the spectral propagator for these fields.
    // fig4: the (0,0) entry collapses to a bare phase and fails the
    // unitarity self-check of its row.
    static const std::vector<std::pair<int, int>> none;
    static const std::vector<std::pair<int, int>> fig2 = {
        {0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 3}};
    static const std::vector<std::pair<int, int>> fig4 = {{0, 0}};
    switch (id) {
        case ScenarioId::Fig2: return fig2;
        case ScenarioId::Fig4: return fig4;
        default: return none;
    }
}

}  // namespace qqdyn
