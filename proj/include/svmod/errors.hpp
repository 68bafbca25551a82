#pragma once

#include <stdexcept>
#include <string>

namespace svmod {

/// A computed value contradicted a proven-in-advance prediction (degree
/// forecasts, step bounds, terminal nonvanishing). Always a bug or a wrong
/// reading, never user input; reduction engines abort loudly with this.
struct invariant_violation : std::runtime_error {
    explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace svmod
