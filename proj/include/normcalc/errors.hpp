#pragma once

#include <stdexcept>
#include <string>

namespace normcalc {

/// Malformed input: unreduced elements, mismatched ambient groups, bad arguments.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Request outside the supported fragment (multiply-laced types, triality, ...).
class capability_error : public std::runtime_error {
public:
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace normcalc
