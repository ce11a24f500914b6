#ifndef L21_ERRORS_HPP
#define L21_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace l21 {

/// Base class for all toolkit errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range vertices, partial labelings, bad parameters.
class input_error : public error {
public:
    using error::error;
};

/// Arithmetic outside a function's domain, e.g. inverting zero.
class domain_error : public error {
public:
    using error::error;
};

/// A documented operation precondition does not hold; name() identifies which.
class precondition_error : public error {
public:
    precondition_error(std::string name, const std::string& what)
        : error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// The request is beyond what this implementation can decide or construct.
class capability_error : public error {
public:
    using error::error;
};

/// Text input could not be parsed. Carries the 1-based line number.
class parse_error : public error {
public:
    parse_error(int line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An internal invariant failed; indicates a bug, not bad input.
class internal_error : public error {
public:
    using error::error;
};

}  // namespace l21

#endif
