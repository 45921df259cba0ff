// config.cpp — key=value / JSON run-configuration parser with per-subcommand schemas

#include "dicke/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

// Internal failure kinds; parse_config turns them into ParseError (with the
// line) or ValidationError (with the field).
struct SyntaxIssue : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RangeIssue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double number(std::string_view text) {
    text = trim(text);
    double v = 0.0;
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw SyntaxIssue("expected a number, got '" + std::string(text) + "'");
    }
    if (!std::isfinite(v)) {
        throw RangeIssue("must be finite");
    }
    return v;
}

std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        parts.push_back(trim(s.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return parts;
}

std::vector<double> axis_impl(std::string_view text) {
    text = trim(text);
    std::vector<double> axis;
    constexpr std::string_view lin = "linspace(";
    if (text.substr(0, lin.size()) == lin) {
        if (text.back() != ')') {
            throw SyntaxIssue("unterminated linspace(");
        }
        const auto args = split_commas(text.substr(lin.size(), text.size() - lin.size() - 1));
        if (args.size() != 3) {
            throw SyntaxIssue("linspace takes (start, stop, count)");
        }
        const double a = number(args[0]);
        const double b = number(args[1]);
        const double n = number(args[2]);
        if (n != std::floor(n) || n < 1 || n > 1e7) {
            throw RangeIssue("linspace count must be an integer in [1, 1e7]");
        }
        const auto count = static_cast<std::size_t>(n);
        axis.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            axis.push_back(count == 1 ? a : a + (b - a) * double(i) / double(count - 1));
        }
    } else {
        if (text.empty()) {
            throw RangeIssue("axis must be nonempty");
        }
        for (std::string_view part : split_commas(text)) {
            axis.push_back(number(part));
        }
    }
    if (axis.size() > 1) {
        const bool up = axis[1] > axis[0];
        for (std::size_t i = 1; i < axis.size(); ++i) {
            if (up ? !(axis[i] > axis[i - 1]) : !(axis[i] < axis[i - 1])) {
                throw RangeIssue("axis must be strictly monotone");
            }
        }
    }
    return axis;
}

cplx complex_value(std::string_view text) {
    const auto parts = split_commas(text);
    if (parts.size() == 1) {
        return {number(parts[0]), 0.0};
    }
    if (parts.size() == 2) {
        return {number(parts[0]), number(parts[1])};
    }
    throw SyntaxIssue("expected 're' or 're,im'");
}

bool boolean(std::string_view text) {
    text = trim(text);
    if (text == "true" || text == "1" || text == "yes" || text == "on") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no" || text == "off") {
        return false;
    }
    throw SyntaxIssue("expected true or false");
}

struct Entry {
    std::string value;
    int line;
};

using Document = std::vector<std::pair<std::string, Entry>>;

bool valid_key(std::string_view k) {
    if (k.empty() || !(std::isalpha(static_cast<unsigned char>(k[0])) || k[0] == '_')) {
        return false;
    }
    return std::all_of(k.begin(), k.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

void add_entry(Document& doc, std::string key, std::string value, int line) {
    for (const auto& [k, e] : doc) {
        if (k == key) {
            throw ParseError(line, "duplicate key '" + key + "' (first on line " + std::to_string(e.line) + ")");
        }
    }
    doc.emplace_back(std::move(key), Entry{std::move(value), line});
}

Document read_key_value(std::string_view text) {
    Document doc;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line_no;
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, "expected key=value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        if (!valid_key(key)) {
            throw ParseError(line_no, "invalid key '" + std::string(key) + "'");
        }
        add_entry(doc, std::string(key), std::string(trim(line.substr(eq + 1))), line_no);
    }
    return doc;
}

std::string format_number(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return {buf, r.ptr};
}

int line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + long(offset), '\n'));
}

Document read_json(std::string_view text) {
    nlohmann::json j;
    // The parsed object keeps only the last of repeated keys, so duplicates are caught here.
    std::set<std::string> seen;
    auto on_event = [&](int depth, nlohmann::json::parse_event_t event, nlohmann::json& parsed) {
        if (depth == 1 && event == nlohmann::json::parse_event_t::key) {
            const std::string key = parsed.get<std::string>();
            if (!seen.insert(key).second) {
                const std::string quoted = "\"" + key + "\"";
                const auto first = text.find(quoted);
                const auto second = text.find(quoted, first + 1);
                throw ParseError(line_of_offset(text, second == std::string_view::npos ? first : second),
                                 "duplicate key '" + key + "'");
            }
        }
        return true;
    };
    try {
        j = nlohmann::json::parse(text.begin(), text.end(), on_event);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON document");
    }
    if (!j.is_object()) {
        throw ParseError(1, "JSON document must be an object");
    }
    auto scalar = [](const nlohmann::json& v, const std::string& key, int line) -> std::string {
        if (v.is_number()) {
            return format_number(v.get<double>());
        }
        if (v.is_string()) {
            return v.get<std::string>();
        }
        if (v.is_boolean()) {
            return v.get<bool>() ? "true" : "false";
        }
        throw ParseError(line, key + ": expected a number, string or boolean");
    };
    Document doc;
    for (const auto& [key, v] : j.items()) {
        const auto at = text.find("\"" + key + "\"");
        const int line = at == std::string_view::npos ? 1 : line_of_offset(text, at);
        if (!valid_key(key)) {
            throw ParseError(line, "invalid key '" + key + "'");
        }
        std::string value;
        if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (!v[i].is_number()) {
                    throw ParseError(line, key + ": array elements must be numbers");
                }
                value += (i ? "," : "") + scalar(v[i], key, line);
            }
        } else {
            value = scalar(v, key, line);
        }
        add_entry(doc, key, value, line);
    }
    return doc;
}

enum class Need { optional, required };

struct Schema {
    std::map<std::string, Need> keys;
};

const std::set<std::string> integration_keys = {"dt", "sample_dt", "max_halvings", "halving_rtol"};
const std::set<std::string> seed_keys = {"seed_alpha", "seed_beta_plus", "seed_beta_minus", "seed_beta_zero"};

Schema schema_for(Subcommand s) {
    Schema sc;
    auto opt = [&](std::initializer_list<const char*> ks) {
        for (const char* k : ks) sc.keys[k] = Need::optional;
    };
    auto req = [&](std::initializer_list<const char*> ks) {
        for (const char* k : ks) sc.keys[k] = Need::required;
    };
    opt({"subcommand", "out", "format", "kappa"});
    req({"omega"});
    switch (s) {
    case Subcommand::eigmap:
        req({"model", "q_axis", "omega0_axis"});
        opt({"lambda_plus", "lambda_minus", "Lambda_plus", "Lambda_minus"});
        break;
    case Subcommand::boundaries:
        req({"model"});
        opt({"omega0", "omega0_axis", "q", "lambda_plus", "lambda_minus", "Lambda_plus", "Lambda_minus"});
        break;
    case Subcommand::moments:
        req({"dt", "t_end"});
        opt({"omega0", "q", "lambda_plus", "lambda_minus", "Lambda_plus", "Lambda_minus", "sample_dt",
             "max_halvings", "halving_rtol"});
        break;
    case Subcommand::semiclassical:
        req({"model", "dt", "t_end"});
        opt({"omega0", "q", "lambda_plus", "lambda_minus", "Lambda_plus", "Lambda_minus", "sample_dt",
             "max_halvings", "halving_rtol", "seed_alpha", "seed_beta_plus", "seed_beta_minus",
             "seed_beta_zero"});
        break;
    case Subcommand::phasemap:
        req({"lambda_plus_axis", "lambda_minus_axis", "dt"});
        opt({"omega0", "q", "sample_dt", "max_halvings", "halving_rtol", "seed_alpha", "seed_beta_plus",
             "seed_beta_minus", "seed_beta_zero", "window_start", "window_end", "eps_mean", "eps_amp",
             "chaos", "chaos_perturbation", "chaos_t_end", "chaos_renorm_interval", "chaos_dt"});
        break;
    }
    return sc;
}

class Reader {
public:
    explicit Reader(const Document& doc) : doc_(doc) {}

    const Entry* find(const std::string& key) const {
        for (const auto& [k, e] : doc_) {
            if (k == key) return &e;
        }
        return nullptr;
    }

    bool has(const std::string& key) const { return find(key) != nullptr; }

    template <class F>
    auto convert(const std::string& key, F&& f) const {
        const Entry* e = find(key);
        try {
            return f(e->value);
        } catch (const SyntaxIssue& x) {
            throw ParseError(e->line, key + ": " + x.what());
        } catch (const RangeIssue& x) {
            throw ValidationError(key, x.what());
        }
    }

    double real(const std::string& key, double fallback) const {
        return has(key) ? convert(key, number) : fallback;
    }

private:
    const Document& doc_;
};

void require(bool ok, const std::string& field, const std::string& what) {
    if (!ok) {
        throw ValidationError(field, what);
    }
}

} // namespace

const char* to_string(Subcommand s) {
    switch (s) {
    case Subcommand::eigmap: return "eigmap";
    case Subcommand::boundaries: return "boundaries";
    case Subcommand::moments: return "moments";
    case Subcommand::semiclassical: return "semiclassical";
    case Subcommand::phasemap: return "phasemap";
    }
    return "eigmap";
}

std::optional<Subcommand> subcommand_from_string(std::string_view name) {
    for (Subcommand s : {Subcommand::eigmap, Subcommand::boundaries, Subcommand::moments,
                         Subcommand::semiclassical, Subcommand::phasemap}) {
        if (name == to_string(s)) return s;
    }
    return std::nullopt;
}

const char* to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "jsonl"; }

std::optional<OutputFormat> output_format_from_string(std::string_view name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "jsonl") return OutputFormat::jsonl;
    return std::nullopt;
}

LinearModel RunConfig::linear_model() const {
    if (model == "bec") return LinearModel::bec;
    if (model == "closed") return LinearModel::closed;
    return LinearModel::open;
}

SemiclassicalSystem RunConfig::semiclassical_system() const {
    return model == "adiabatic" ? SemiclassicalSystem::adiabatic : SemiclassicalSystem::full;
}

std::vector<double> parse_axis(std::string_view text) {
    try {
        return axis_impl(text);
    } catch (const SyntaxIssue& e) {
        throw InvalidParameter(e.what());
    } catch (const RangeIssue& e) {
        throw InvalidParameter(e.what());
    }
}

RunConfig parse_config(std::string_view document, std::optional<Subcommand> subcommand) {
    const std::string_view body = trim(document);
    const Document doc = (!body.empty() && body.front() == '{') ? read_json(document) : read_key_value(document);
    const Reader in(doc);

    if (const Entry* e = in.find("subcommand")) {
        const auto named = subcommand_from_string(e->value);
        if (!named) {
            throw ValidationError("subcommand", "unknown subcommand '" + e->value + "'");
        }
        if (subcommand && *subcommand != *named) {
            throw ValidationError("subcommand", std::string("document is for '") + to_string(*named) +
                                                    "', not '" + to_string(*subcommand) + "'");
        }
        subcommand = named;
    }
    if (!subcommand) {
        throw ValidationError("subcommand", "no subcommand given");
    }

    RunConfig cfg;
    cfg.subcommand = *subcommand;
    const Schema schema = schema_for(cfg.subcommand);
    for (const auto& [key, e] : doc) {
        if (!schema.keys.count(key)) {
            throw ValidationError(key, std::string("unknown key for ") + to_string(cfg.subcommand));
        }
        cfg.echo.emplace_back(key, e.value);
    }
    for (const auto& [key, need] : schema.keys) {
        if (need == Need::required && !in.has(key)) {
            throw ValidationError(key, "required key missing");
        }
    }

    // Model kind.
    if (in.has("model")) {
        cfg.model = in.find("model")->value;
        std::vector<std::string> allowed;
        if (cfg.subcommand == Subcommand::eigmap) allowed = {"bec", "closed", "open"};
        if (cfg.subcommand == Subcommand::boundaries) allowed = {"closed", "open"};
        if (cfg.subcommand == Subcommand::semiclassical) allowed = {"full", "adiabatic"};
        if (std::find(allowed.begin(), allowed.end(), cfg.model) == allowed.end()) {
            std::string list;
            for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
            throw ValidationError("model", "'" + cfg.model + "' is not one of " + list);
        }
    } else if (cfg.subcommand == Subcommand::moments) {
        cfg.model = "open";
    } else if (cfg.subcommand == Subcommand::phasemap) {
        cfg.model = "full";
    }

    // Rates.
    Rates r;
    r.omega = in.real("omega", 1.0);
    r.omega0 = in.real("omega0", 0.0);
    r.q = in.real("q", 0.0);
    r.kappa = in.real("kappa", 0.0);
    r.lambda_plus = in.real("lambda_plus", 0.0);
    r.lambda_minus = in.real("lambda_minus", 0.0);
    const bool needs_positive_omega = !(cfg.subcommand == Subcommand::semiclassical && cfg.model == "full");
    require(!needs_positive_omega || r.omega > 0.0, "omega", "must be > 0 for this model");
    require(r.kappa >= 0.0, "kappa", "must be >= 0");
    require(r.lambda_plus >= 0.0, "lambda_plus", "must be >= 0");
    require(r.lambda_minus >= 0.0, "lambda_minus", "must be >= 0");

    const bool raw = in.has("lambda_plus") || in.has("lambda_minus");
    const bool effective = in.has("Lambda_plus") || in.has("Lambda_minus");
    if (raw && effective) {
        throw ValidationError(in.has("Lambda_plus") ? "Lambda_plus" : "Lambda_minus",
                              "cannot be combined with lambda_plus/lambda_minus");
    }
    if (effective) {
        const double Lp = in.real("Lambda_plus", 0.0);
        const double Lm = in.real("Lambda_minus", 0.0);
        require(Lp >= 0.0, "Lambda_plus", "must be >= 0");
        require(Lm >= 0.0, "Lambda_minus", "must be >= 0");
        require(r.omega > 0.0, "omega", "must be > 0 when Lambda_plus/Lambda_minus are given");
        cfg.params = from_effective_couplings(Lp, Lm, r.omega, r.kappa, r.omega0, r.q);
    } else {
        cfg.params = ModelParams(r);
    }

    // Axes.
    auto axis = [&](const char* key, std::vector<double>& dst) {
        if (in.has(key)) dst = in.convert(key, axis_impl);
    };
    axis("q_axis", cfg.q_axis);
    axis("omega0_axis", cfg.omega0_axis);
    axis("lambda_plus_axis", cfg.lambda_plus_axis);
    axis("lambda_minus_axis", cfg.lambda_minus_axis);
    if (cfg.subcommand == Subcommand::boundaries && cfg.omega0_axis.empty()) {
        cfg.omega0_axis = {cfg.params.omega0()};
    }
    if (cfg.subcommand == Subcommand::boundaries) {
        require(!(in.has("omega0") && in.has("omega0_axis")), "omega0_axis", "cannot be combined with omega0");
    }
    for (const char* key : {"lambda_plus_axis", "lambda_minus_axis"}) {
        const auto& ax = std::string(key) == "lambda_plus_axis" ? cfg.lambda_plus_axis : cfg.lambda_minus_axis;
        for (double v : ax) {
            require(v >= 0.0, key, "couplings must be >= 0");
        }
    }

    // Integration.
    IntegrationSettings& s = cfg.integration;
    s.dt = in.real("dt", s.dt);
    s.t_end = in.real("t_end", 0.0);
    s.sample_dt = in.real("sample_dt", 0.0);
    s.halving_rtol = in.real("halving_rtol", s.halving_rtol);
    if (in.has("max_halvings")) {
        const double h = in.real("max_halvings", 0.0);
        require(h == std::floor(h) && h >= 0 && h <= 12, "max_halvings", "must be an integer in [0, 12]");
        s.max_halvings = static_cast<int>(h);
    }
    if (in.has("dt")) require(s.dt > 0.0, "dt", "must be > 0");
    if (in.has("t_end")) require(s.t_end > 0.0, "t_end", "must be > 0");
    require(s.sample_dt >= 0.0, "sample_dt", "must be >= 0 (0 selects the default)");
    require(s.halving_rtol > 0.0, "halving_rtol", "must be > 0");

    // Seed.
    auto seed = [&](const char* key, cplx& dst) {
        if (in.has(key)) dst = in.convert(key, complex_value);
    };
    seed("seed_alpha", cfg.seed.alpha);
    seed("seed_beta_plus", cfg.seed.beta_plus);
    seed("seed_beta_minus", cfg.seed.beta_minus);
    seed("seed_beta_zero", cfg.seed.beta_zero);

    // Phase window, thresholds and chaos score.
    cfg.window.t_start = in.real("window_start", cfg.window.t_start);
    cfg.window.t_end = in.real("window_end", cfg.window.t_end);
    require(cfg.window.t_start >= 0.0, "window_start", "must be >= 0");
    require(cfg.window.t_end > cfg.window.t_start, "window_end", "must exceed window_start");
    cfg.thresholds.eps_mean = in.real("eps_mean", cfg.thresholds.eps_mean);
    cfg.thresholds.eps_amp = in.real("eps_amp", cfg.thresholds.eps_amp);
    require(cfg.thresholds.eps_mean > 0.0, "eps_mean", "must be > 0");
    require(cfg.thresholds.eps_amp > 0.0, "eps_amp", "must be > 0");
    if (in.has("chaos")) cfg.chaos.enabled = in.convert("chaos", boolean);
    cfg.chaos.perturbation = in.real("chaos_perturbation", cfg.chaos.perturbation);
    cfg.chaos.t_end = in.real("chaos_t_end", cfg.window.t_end);
    cfg.chaos.renorm_interval = in.real("chaos_renorm_interval", cfg.chaos.renorm_interval);
    cfg.chaos.dt = in.real("chaos_dt", cfg.integration.dt);
    require(cfg.chaos.perturbation > 0.0, "chaos_perturbation", "must be > 0");
    require(cfg.chaos.t_end > 0.0, "chaos_t_end", "must be > 0");
    require(cfg.chaos.renorm_interval > 0.0, "chaos_renorm_interval", "must be > 0");
    require(cfg.chaos.dt > 0.0, "chaos_dt", "must be > 0");

    // Output.
    if (const Entry* e = in.find("out")) {
        require(!e->value.empty(), "out", "must be a path");
        cfg.out_path = e->value;
    }
    if (const Entry* e = in.find("format")) {
        const auto f = output_format_from_string(e->value);
        require(f.has_value(), "format", "must be csv or jsonl");
        cfg.format = *f;
    }
    return cfg;
}

} // namespace dicke
