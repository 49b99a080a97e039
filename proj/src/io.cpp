#include "symstats/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace symstats {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string line_column_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] void shape_error(const std::string& path, const std::string& message) {
    throw ParseError(message, path);
}

double number_at(const ordered_json& j, const std::string& path) {
    if (!j.is_number()) shape_error(path, "expected a number");
    return j.get<double>();
}

Interval parse_interval_cell(const ordered_json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) {
        shape_error(path, "interval cell must be a [lower, upper] pair");
    }
    return Interval(number_at(j[0], path + "[0]"), number_at(j[1], path + "[1]"));
}

Histogram parse_histogram_cell(const ordered_json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) {
        shape_error(path, "histogram cell must be a non-empty list of "
                          "[lower, upper, weight] triples");
    }
    std::vector<HistogramBin> bins;
    bins.reserve(j.size());
    for (std::size_t h = 0; h < j.size(); ++h) {
        const auto& bin = j[h];
        const std::string bin_path = path + "[" + std::to_string(h) + "]";
        if (!bin.is_array() || bin.size() != 3) {
            shape_error(bin_path, "histogram bin must be a [lower, upper, weight] triple");
        }
        bins.push_back({Interval(number_at(bin[0], bin_path + "[0]"),
                                 number_at(bin[1], bin_path + "[1]")),
                        number_at(bin[2], bin_path + "[2]")});
    }
    return Histogram(std::move(bins));
}

} // namespace

SymbolicDataset parse_dataset(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), line_column_of(text, e.byte));
    }

    if (!doc.is_object()) shape_error("$", "document must be a JSON object");
    if (!doc.contains("format") || !doc["format"].is_number_integer() ||
        doc["format"].get<int>() != 1) {
        shape_error("format", "missing or unsupported format version (expected 1)");
    }
    if (!doc.contains("variables") || !doc["variables"].is_array()) {
        shape_error("variables", "missing variables array");
    }
    const auto& vars = doc["variables"];
    if (vars.empty()) shape_error("variables", "variable list is empty");

    std::vector<SymbolicVariable> variables;
    variables.reserve(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v) {
        const std::string vpath = "variables[" + std::to_string(v) + "]";
        const auto& var = vars[v];
        if (!var.is_object()) shape_error(vpath, "variable must be an object");
        if (!var.contains("name") || !var["name"].is_string()) {
            shape_error(vpath + ".name", "missing variable name");
        }
        const std::string name = var["name"].get<std::string>();
        if (!var.contains("kind") || !var["kind"].is_string()) {
            shape_error(vpath + ".kind", "missing cell kind");
        }
        const std::string kind = var["kind"].get<std::string>();
        if (kind != "interval" && kind != "histogram") {
            shape_error(vpath + ".kind",
                        "cell kind must be 'interval' or 'histogram', got '" + kind + "'");
        }
        if (!var.contains("cells") || !var["cells"].is_array() || var["cells"].empty()) {
            shape_error(vpath + ".cells", "missing or empty cells array");
        }
        for (const auto& earlier : variables) {
            if (earlier.name() == name) {
                shape_error(vpath + ".name", "duplicate variable name '" + name + "'");
            }
        }

        std::vector<Cell> cells;
        cells.reserve(var["cells"].size());
        for (std::size_t i = 0; i < var["cells"].size(); ++i) {
            const std::string cpath = vpath + ".cells[" + std::to_string(i) + "]";
            try {
                if (kind == "interval") {
                    cells.emplace_back(parse_interval_cell(var["cells"][i], cpath));
                } else {
                    cells.emplace_back(parse_histogram_cell(var["cells"][i], cpath));
                }
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw Error(e.code(), "variable '" + name + "', unit " +
                                          std::to_string(i + 1) + ": " + e.what());
            }
        }
        variables.emplace_back(name, std::move(cells));
    }
    return SymbolicDataset(std::move(variables));
}

std::string serialize_dataset(const SymbolicDataset& d) {
    ordered_json doc;
    doc["format"] = 1;
    doc["variables"] = ordered_json::array();
    for (const auto& v : d.variables()) {
        ordered_json var;
        var["name"] = v.name();
        var["kind"] = v.kind() == CellKind::interval ? "interval" : "histogram";
        ordered_json cells = ordered_json::array();
        for (const auto& c : v.cells()) {
            if (const auto* iv = std::get_if<Interval>(&c)) {
                cells.push_back(ordered_json::array({iv->lower(), iv->upper()}));
            } else {
                const auto& h = std::get<Histogram>(c);
                ordered_json bins = ordered_json::array();
                for (const auto& b : h.bins()) {
                    bins.push_back(ordered_json::array(
                        {b.interval.lower(), b.interval.upper(), b.weight}));
                }
                cells.push_back(std::move(bins));
            }
        }
        var["cells"] = std::move(cells);
        doc["variables"].push_back(std::move(var));
    }
    return doc.dump(2) + "\n";
}

SymbolicDataset load_dataset_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(errc::io, "cannot open dataset file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_dataset(buffer.str());
}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json-lines") return OutputFormat::json_lines;
    throw Error(errc::out_of_range,
                "unknown output format '" + name + "' (table, csv, json-lines)");
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += "\"";
    return out;
}

std::string plain_text(const FieldValue& v) {
    switch (v.kind) {
    case FieldValue::Kind::text: return v.text;
    case FieldValue::Kind::number: return format_number(v.number);
    case FieldValue::Kind::integer: return std::to_string(v.integer);
    case FieldValue::Kind::empty: return "";
    }
    return "";
}

void write_table(std::ostream& out, const std::vector<Record>& records) {
    if (records.empty()) return;
    const auto& header = records.front().fields;
    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        widths[c] = header[c].first.size();
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const auto& r : records) {
        std::vector<std::string> row;
        row.reserve(r.fields.size());
        for (std::size_t c = 0; c < r.fields.size(); ++c) {
            std::string cell = plain_text(r.fields[c].second);
            if (cell.empty()) cell = "-";
            widths[c] = std::max(widths[c], cell.size());
            row.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    auto write_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) out << "  ";
            out << cells[c];
            if (c + 1 < cells.size()) {
                out << std::string(widths[c] - cells[c].size(), ' ');
            }
        }
        out << "\n";
    };
    std::vector<std::string> names;
    names.reserve(header.size());
    for (const auto& f : header) names.push_back(f.first);
    write_row(names);
    for (const auto& row : rows) write_row(row);
}

void write_csv(std::ostream& out, const std::vector<Record>& records) {
    if (records.empty()) return;
    const auto& header = records.front().fields;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c > 0) out << ",";
        out << csv_escape(header[c].first);
    }
    out << "\n";
    for (const auto& r : records) {
        for (std::size_t c = 0; c < r.fields.size(); ++c) {
            if (c > 0) out << ",";
            out << csv_escape(plain_text(r.fields[c].second));
        }
        out << "\n";
    }
}

void write_json_lines(std::ostream& out, const std::vector<Record>& records) {
    for (const auto& r : records) {
        out << "{";
        for (std::size_t c = 0; c < r.fields.size(); ++c) {
            if (c > 0) out << ",";
            out << json_escape(r.fields[c].first) << ":";
            const auto& v = r.fields[c].second;
            switch (v.kind) {
            case FieldValue::Kind::text: out << json_escape(v.text); break;
            case FieldValue::Kind::number: out << format_number(v.number); break;
            case FieldValue::Kind::integer: out << v.integer; break;
            case FieldValue::Kind::empty: out << "null"; break;
            }
        }
        out << "}\n";
    }
}

} // namespace

void write_records(std::ostream& out, const std::vector<Record>& records,
                   OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::table: write_table(out, records); break;
    case OutputFormat::csv: write_csv(out, records); break;
    case OutputFormat::json_lines: write_json_lines(out, records); break;
    }
}

Record to_record(const std::string& variable, const UnivariateReport& r) {
    Record rec;
    rec.add("variable", FieldValue::of(variable));
    rec.add("n", FieldValue::of(static_cast<long long>(r.n)));
    rec.add("mean", FieldValue::of(r.mean));
    rec.add("variance", FieldValue::of(r.variance));
    rec.add("ssw", FieldValue::of(r.ssw));
    rec.add("ssb", FieldValue::of(r.ssb));
    rec.add("sst", FieldValue::of(r.sst));
    return rec;
}

Record to_record(const std::string& x, const std::string& y, const CovReport& r) {
    Record rec;
    rec.add("x", FieldValue::of(x));
    rec.add("y", FieldValue::of(y));
    rec.add("estimator", FieldValue::of(std::string(estimator_name(r.estimator))));
    rec.add("n", FieldValue::of(static_cast<long long>(r.n)));
    rec.add("csw", FieldValue::of(r.csw));
    rec.add("csb", FieldValue::of(r.csb));
    rec.add("cst", FieldValue::of(r.cst));
    rec.add("covariance", FieldValue::of(r.covariance));
    rec.add("correlation", r.correlation ? FieldValue::of(*r.correlation)
                                         : FieldValue::none());
    std::string note;
    if (!r.correlation) {
        note = "corr-undefined";
    } else if (std::abs(*r.correlation) > 1.0 + 1e-9) {
        // guard band keeps rounding residue on exactly-comonotone pairs
        // (|r| = 1 up to a few ulp) from tripping the flag
        note = "corr-exceeds-1";
    }
    rec.add("note", FieldValue::of(note));
    return rec;
}

Record to_record(const std::string& variable, const SelfCovarianceReport& r) {
    Record rec;
    rec.add("variable", FieldValue::of(variable));
    rec.add("estimator", FieldValue::of(std::string(estimator_name(r.estimator))));
    rec.add("n", FieldValue::of(static_cast<long long>(r.n)));
    rec.add("variance", FieldValue::of(r.variance1));
    rec.add("cst", FieldValue::of(r.cst));
    rec.add("n_times_variance", FieldValue::of(r.n_times_variance));
    rec.add("discrepancy", FieldValue::of(r.discrepancy));
    return rec;
}

std::vector<Record> to_records(const std::string& x, const std::string& y,
                               const RefinementTrace& trace) {
    std::vector<Record> out;
    out.reserve(trace.steps.size());
    for (const auto& s : trace.steps) {
        Record rec;
        rec.add("splits", FieldValue::of(static_cast<long long>(s.splits)));
        rec.add("cov", FieldValue::of(s.cov));
        rec.add("cov_means", FieldValue::of(s.cov_means));
        rec.add("mean_" + x, FieldValue::of(s.mean1));
        rec.add("mean_" + y, FieldValue::of(s.mean2));
        rec.add("variance_" + x, FieldValue::of(s.variance1));
        rec.add("variance_" + y, FieldValue::of(s.variance2));
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace symstats
