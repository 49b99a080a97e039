#pragma once

#include <stdexcept>
#include <string>

namespace symstats {

/// Error categories raised by validation, statistics and I/O routines.
enum class errc {
    empty_bins,
    non_contiguous,
    weight_sum,
    negative_weight,
    zero_width_massive_bin,
    out_of_range,
    degenerate_interval,
    invalid_interval,
    empty_variable,
    mixed_cell_kinds,
    length_mismatch,
    kind_mismatch,
    too_many_splits,
    unknown_variable,
    syntax,
    io,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Syntax error in a dataset document; location is a line/column pair or a
/// JSON-path-like string, whichever the parser could recover.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::string location)
        : Error(errc::syntax, location.empty() ? message : location + ": " + message),
          location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

} // namespace symstats
