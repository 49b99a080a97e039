#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "symstats/bivariate.hpp"
#include "symstats/dataset.hpp"
#include "symstats/diagnostics.hpp"
#include "symstats/univariate.hpp"

namespace symstats {

/// Dataset document format (JSON):
///
///   {
///     "format": 1,
///     "variables": [
///       { "name": "Y1", "kind": "histogram",
///         "cells": [ [[10,20,0.4],[20,30,0.6]], ... ] },
///       { "name": "Y2", "kind": "interval",
///         "cells": [ [0,2], [4,6] ] }
///     ]
///   }
///
/// Interval cells are [lower, upper] pairs, histogram cells are lists of
/// [lower, upper, weight] triples. parse(serialize(d)) == d exactly; floats
/// are written in round-trip-exact form.

/// Throws ParseError for malformed documents (with line/column or a
/// variables[i].cells[j] path) and Error with the underlying validation
/// code, prefixed by variable name and unit index, for invalid cells.
SymbolicDataset parse_dataset(const std::string& text);

std::string serialize_dataset(const SymbolicDataset& d);

/// Throws Error(io) when the file cannot be read.
SymbolicDataset load_dataset_file(const std::string& path);

enum class OutputFormat { table, csv, json_lines };

/// "table", "csv" or "json-lines"; throws Error(out_of_range) otherwise.
OutputFormat parse_output_format(const std::string& name);

/// Numbers are printed with 12 significant digits everywhere.
std::string format_number(double x);

// Flat report records rendered as an aligned table, CSV, or one JSON object
// per line. Field order is fixed, so identical inputs give identical bytes.

struct FieldValue {
    enum class Kind { text, number, integer, empty } kind = Kind::empty;
    std::string text;
    double number = 0.0;
    long long integer = 0;

    static FieldValue of(const std::string& s) { return {Kind::text, s, 0.0, 0}; }
    static FieldValue of(double x) { return {Kind::number, {}, x, 0}; }
    static FieldValue of(long long i) { return {Kind::integer, {}, 0.0, i}; }
    static FieldValue none() { return {}; }
};

struct Record {
    std::vector<std::pair<std::string, FieldValue>> fields;
    void add(const std::string& name, FieldValue v) { fields.emplace_back(name, std::move(v)); }
};

void write_records(std::ostream& out, const std::vector<Record>& records, OutputFormat fmt);

Record to_record(const std::string& variable, const UnivariateReport& r);
Record to_record(const std::string& x, const std::string& y, const CovReport& r);
Record to_record(const std::string& variable, const SelfCovarianceReport& r);
std::vector<Record> to_records(const std::string& x, const std::string& y,
                               const RefinementTrace& trace);

} // namespace symstats
