#pragma once

#include <stdexcept>
#include <string>

namespace prevariety {

class MalformedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptyRegion : public std::runtime_error {
public:
    EmptyRegion() : std::runtime_error("operation requires a nonempty region") {}
};

class DegenerateOrientation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateFan : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OracleTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace prevariety
