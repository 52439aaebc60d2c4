// Built-in reference curves with their expected values stored as data.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "curve_spec.hpp"

namespace qhelix::cli {

struct Fixture {
    std::string name;
    std::string title;
    json spec;
    json expected;  // check name -> exact expected value
};

const std::vector<Fixture>& builtin_fixtures();
/// nullptr for an unknown name.
const Fixture* find_fixture(std::string_view name);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

/// Recomputes every expected quantity from the fixture's spec and compares.
std::vector<CheckResult> run_fixture(const Fixture& f);

}  // namespace qhelix::cli
