#pragma once
#include <stdexcept>
#include <string>

namespace fortlab {

/* Thrown when a policy cap or search budget stops a computation. The CLI
   maps this to its own exit code, distinct from bad usage and from
   verification mismatches. */
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fortlab
