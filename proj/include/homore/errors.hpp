#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homore {

// Mixing elements of different coefficient rings (or ParamPoly rings with
// different parameter lists) is always a caller bug, never a silent coercion.
class ring_mismatch_error : public std::invalid_argument {
public:
    explicit ring_mismatch_error(const std::string& what)
        : std::invalid_argument(what) {}
};

class not_invertible_error : public std::domain_error {
public:
    explicit not_invertible_error(const std::string& what)
        : std::domain_error(what) {}
};

// A degree-windowed twist table was asked about an X-degree it does not describe.
class window_exceeded_error : public std::domain_error {
public:
    explicit window_exceeded_error(const std::string& what)
        : std::domain_error(what) {}
};

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t offset, const std::string& message)
        : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                             ": " + message),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace homore
