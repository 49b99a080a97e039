#pragma once

// The worked datasets used across the test suites: a single pulse-rate
// histogram and a two-unit, two-variable histogram dataset (plus the variant
// of its second variable with every bin split in two).

#include "symstats/dataset.hpp"

namespace symstats::testing {

inline Histogram pulse_rate_histogram() {
    return Histogram({{Interval(80, 90), 0.1},
                      {Interval(90, 100), 0.3},
                      {Interval(100, 110), 0.4},
                      {Interval(110, 120), 0.2}});
}

inline SymbolicVariable two_unit_variable(const std::string& name) {
    return SymbolicVariable(
        name,
        {Histogram({{Interval(10, 20), 0.4}, {Interval(20, 30), 0.6}}),
         Histogram({{Interval(50, 60), 0.2}, {Interval(60, 70), 0.8}})});
}

inline SymbolicVariable two_unit_variable_split(const std::string& name) {
    return SymbolicVariable(
        name,
        {Histogram({{Interval(10, 15), 0.2},
                    {Interval(15, 20), 0.2},
                    {Interval(20, 25), 0.3},
                    {Interval(25, 30), 0.3}}),
         Histogram({{Interval(50, 55), 0.1},
                    {Interval(55, 60), 0.1},
                    {Interval(60, 65), 0.4},
                    {Interval(65, 70), 0.4}})});
}

} // namespace symstats::testing
