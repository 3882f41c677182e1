#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace cubhom {

// Exact arbitrary-precision integer used for all matrix arithmetic.
using Int = boost::multiprecision::cpp_int;

// Raised when user-supplied data fails a structural or semantic check
// (bad file, non-functorial system, face table violating the cubical
// identities, ...).  The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cubhom
