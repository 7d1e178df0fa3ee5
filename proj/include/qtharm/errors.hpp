#pragma once

#include <stdexcept>
#include <string>

namespace qtharm {

// Error taxonomy shared by every module. The C API maps each kind to a
// distinct status code.
class Error : public std::runtime_error {
public:
    enum class Kind { Input, Domain, Capacity, Parse, Unsupported };

    Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// Bad argument from the caller (out-of-range vertex id, invalid parameters).
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(Kind::Input, what) {}
};

// Value undefined for this input (diameter of a disconnected graph,
// harmonic index of an edgeless graph, bound outside its parameter domain).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(Kind::Domain, what) {}
};

// Input exceeds a documented size cap.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error(Kind::Capacity, what) {}
};

// Malformed serialized input; message carries a byte offset or line number.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(Kind::Parse, what) {}
};

// Requested feature exists but is not provided for this argument
// (e.g. closed form for a family kind without one).
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& what) : Error(Kind::Unsupported, what) {}
};

}  // namespace qtharm
