#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "symstats/histogram.hpp"

namespace symstats {

/// One symbolic description: an interval or a histogram.
using Cell = std::variant<Interval, Histogram>;

enum class CellKind { interval, histogram };

CellKind cell_kind(const Cell& c) noexcept;
UnitMoments cell_moments(const Cell& c) noexcept;
double cell_second_raw_moment(const Cell& c) noexcept;

/// A column of n cells describing n units. All cells must be of the same
/// kind; mixed interval/histogram columns are rejected (embed intervals
/// explicitly via interval_as_histogram when that is intended).
class SymbolicVariable {
public:
    SymbolicVariable(std::string name, std::vector<Cell> cells);

    const std::string& name() const noexcept { return name_; }
    CellKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return cells_.size(); }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    const Cell& cell(std::size_t i) const { return cells_.at(i); }

    /// Per-unit means and variances, in unit order.
    std::vector<UnitMoments> unit_moments() const;

    friend bool operator==(const SymbolicVariable&, const SymbolicVariable&) = default;

private:
    std::string name_;
    std::vector<Cell> cells_;
    CellKind kind_;
};

/// n units by p variables; every variable has the same number of units.
class SymbolicDataset {
public:
    explicit SymbolicDataset(std::vector<SymbolicVariable> variables);

    std::size_t n_units() const noexcept;
    const std::vector<SymbolicVariable>& variables() const noexcept { return variables_; }

    /// Throws Error(unknown_variable) when absent.
    const SymbolicVariable& variable(const std::string& name) const;

    friend bool operator==(const SymbolicDataset&, const SymbolicDataset&) = default;

private:
    std::vector<SymbolicVariable> variables_;
};

} // namespace symstats
