#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

// Base error for all exact-arithmetic and domain failures.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-facing configuration (group spec, kappa list, CLI flags).
struct config_error : error {
    using error::error;
};

}  // namespace dunkl
