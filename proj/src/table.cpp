// table.cpp — CSV / JSONL emission and CSV parsing for result tables

#include "dicke/table.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

bool needs_quotes(std::string_view s) {
    return s.empty() || s.find_first_of(",\"\r\n") != std::string_view::npos ||
           s.front() == ' ' || s.back() == ' ' || s.front() == '#';
}

std::string csv_field(const Cell& c) {
    if (const double* d = std::get_if<double>(&c)) {
        return format_double(*d);
    }
    const std::string& s = std::get<std::string>(c);
    if (!needs_quotes(s)) {
        return s;
    }
    std::string q = "\"";
    for (char ch : s) {
        q += ch;
        if (ch == '"') q += '"';
    }
    return q + "\"";
}

// Non-finite values are written as strings, since JSON has no literal for them.
std::string json_value(const Cell& c) {
    if (const double* d = std::get_if<double>(&c)) {
        return std::isfinite(*d) ? format_double(*d) : nlohmann::json(format_double(*d)).dump();
    }
    return nlohmann::json(std::get<std::string>(c)).dump();
}

void check(std::ostream& out) {
    if (!out) {
        throw std::runtime_error("output stream write failure");
    }
}

// Splits one CSV record starting at pos; advances pos past the record terminator.
std::vector<std::pair<std::string, bool>> read_record(std::string_view text, std::size_t& pos) {
    std::vector<std::pair<std::string, bool>> fields;
    std::string cur;
    bool quoted = false;
    bool in_quotes = false;
    while (pos < text.size()) {
        const char ch = text[pos];
        if (in_quotes) {
            if (ch == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    cur += '"';
                    ++pos;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += ch;
            }
            ++pos;
            continue;
        }
        if (ch == '"') {
            in_quotes = true;
            quoted = true;
        } else if (ch == ',') {
            fields.emplace_back(std::move(cur), quoted);
            cur.clear();
            quoted = false;
        } else if (ch == '\n' || ch == '\r') {
            if (ch == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') ++pos;
            ++pos;
            break;
        } else {
            cur += ch;
        }
        ++pos;
    }
    if (in_quotes) {
        throw ParseError(0, "unterminated quoted CSV field");
    }
    fields.emplace_back(std::move(cur), quoted);
    return fields;
}

Cell to_cell(const std::string& s, bool quoted) {
    if (!quoted && !s.empty()) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && ptr == s.data() + s.size()) {
            return v;
        }
    }
    return s;
}

} // namespace

void ResultTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("row width " + std::to_string(row.size()) + " differs from " +
                                    std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return {buf, r.ptr};
}

std::vector<std::pair<std::string, std::string>> run_metadata(const RunConfig& config) {
    std::vector<std::pair<std::string, std::string>> md = {
        {"@artifact", artifact_name},
        {"@version", artifact_version},
        {"@subcommand", to_string(config.subcommand)},
    };
    for (const auto& [k, v] : config.echo) {
        // Output destination does not affect the data and would break byte identity.
        if (k != "out" && k != "format" && k != "subcommand") {
            md.emplace_back(k, v);
        }
    }
    return md;
}

void emit_csv(const ResultTable& t, std::ostream& out) {
    for (const auto& [k, v] : t.metadata) {
        out << "# " << k << '=' << v << '\n';
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out << (i ? "," : "") << csv_field(t.columns[i]);
    }
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << csv_field(row[i]);
        }
        out << '\n';
    }
    out.flush();
    check(out);
}

void emit_jsonl(const ResultTable& t, std::ostream& out) {
    out << "{\"metadata\":{";
    for (std::size_t i = 0; i < t.metadata.size(); ++i) {
        out << (i ? "," : "") << nlohmann::json(t.metadata[i].first).dump() << ':'
            << nlohmann::json(t.metadata[i].second).dump();
    }
    out << "},\"columns\":[";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out << (i ? "," : "") << nlohmann::json(t.columns[i]).dump();
    }
    out << "]}\n";
    for (const auto& row : t.rows) {
        out << '{';
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << nlohmann::json(t.columns[i]).dump() << ':' << json_value(row[i]);
        }
        out << "}\n";
    }
    out.flush();
    check(out);
}

void emit(const ResultTable& t, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::csv) {
        emit_csv(t, out);
    } else {
        emit_jsonl(t, out);
    }
}

ResultTable parse_csv(std::string_view text) {
    ResultTable t;
    std::size_t pos = 0;
    while (pos < text.size() && text[pos] == '#') {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        line.remove_prefix(1);
        if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            t.metadata.emplace_back(std::string(line), "");
        } else {
            t.metadata.emplace_back(std::string(line.substr(0, eq)), std::string(line.substr(eq + 1)));
        }
    }
    if (pos >= text.size()) {
        return t;
    }
    for (auto& [name, quoted] : read_record(text, pos)) {
        (void)quoted;
        t.columns.push_back(std::move(name));
    }
    while (pos < text.size()) {
        auto fields = read_record(text, pos);
        if (fields.size() == 1 && fields[0].first.empty() && !fields[0].second) {
            continue;
        }
        std::vector<Cell> row;
        row.reserve(fields.size());
        for (auto& [s, quoted] : fields) {
            row.push_back(to_cell(s, quoted));
        }
        t.add_row(std::move(row));
    }
    return t;
}

RunConfig config_from_metadata(const ResultTable& t) {
    std::optional<Subcommand> sub;
    std::string doc;
    for (const auto& [k, v] : t.metadata) {
        if (k == "@subcommand") {
            sub = subcommand_from_string(v);
        } else if (!k.empty() && k.front() != '@') {
            doc += k + "=" + v + "\n";
        }
    }
    if (!sub) {
        throw ValidationError("@subcommand", "metadata does not name a subcommand");
    }
    return parse_config(doc, sub);
}

} // namespace dicke
