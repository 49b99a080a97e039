#include "symstats/dataset.hpp"

#include <string>

namespace symstats {

CellKind cell_kind(const Cell& c) noexcept {
    return std::holds_alternative<Interval>(c) ? CellKind::interval
                                               : CellKind::histogram;
}

UnitMoments cell_moments(const Cell& c) noexcept {
    if (const auto* iv = std::get_if<Interval>(&c)) return interval_moments(*iv);
    return histogram_moments(std::get<Histogram>(c));
}

double cell_second_raw_moment(const Cell& c) noexcept {
    return std::visit([](const auto& x) { return second_raw_moment(x); }, c);
}

SymbolicVariable::SymbolicVariable(std::string name, std::vector<Cell> cells)
    : name_(std::move(name)), cells_(std::move(cells)), kind_(CellKind::interval) {
    if (cells_.empty()) {
        throw Error(errc::empty_variable,
                    "variable '" + name_ + "' has no cells");
    }
    kind_ = cell_kind(cells_.front());
    for (std::size_t i = 1; i < cells_.size(); ++i) {
        if (cell_kind(cells_[i]) != kind_) {
            throw Error(errc::mixed_cell_kinds,
                        "variable '" + name_ + "' mixes interval and histogram "
                        "cells (unit " + std::to_string(i + 1) + ")");
        }
    }
}

std::vector<UnitMoments> SymbolicVariable::unit_moments() const {
    std::vector<UnitMoments> out;
    out.reserve(cells_.size());
    for (const auto& c : cells_) out.push_back(cell_moments(c));
    return out;
}

SymbolicDataset::SymbolicDataset(std::vector<SymbolicVariable> variables)
    : variables_(std::move(variables)) {
    for (std::size_t j = 1; j < variables_.size(); ++j) {
        if (variables_[j].size() != variables_.front().size()) {
            throw Error(errc::length_mismatch,
                        "variable '" + variables_[j].name() + "' has " +
                            std::to_string(variables_[j].size()) +
                            " units but '" + variables_.front().name() +
                            "' has " + std::to_string(variables_.front().size()));
        }
    }
}

std::size_t SymbolicDataset::n_units() const noexcept {
    return variables_.empty() ? 0 : variables_.front().size();
}

const SymbolicVariable& SymbolicDataset::variable(const std::string& name) const {
    for (const auto& v : variables_) {
        if (v.name() == name) return v;
    }
    throw Error(errc::unknown_variable, "no variable named '" + name + "'");
}

} // namespace symstats
