#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crossprod {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidSpace : public Error {
public:
    using Error::Error;
};

class NotAGroup : public Error {
public:
    using Error::Error;
};

class NotGraded : public Error {
public:
    using Error::Error;
};

class NotACocycle : public Error {
public:
    using Error::Error;
};

// A build precondition (axiom check) failed. `item` names the first failing check.
class AxiomViolation : public Error {
public:
    AxiomViolation(std::string item, const std::string& what)
        : Error(what), item_(std::move(item)) {}
    const std::string& item() const noexcept { return item_; }

private:
    std::string item_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
        : Error(what), offset_(offset), expected_(std::move(expected)) {}
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// Byte range [begin, end) in DSL source.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
    bool operator==(const SourceSpan&) const = default;
};

class UnboundName : public Error {
public:
    UnboundName(std::string name, SourceSpan span)
        : Error("unbound name '" + name + "'"), name_(std::move(name)), span_(span) {}
    const std::string& name() const noexcept { return name_; }
    SourceSpan span() const noexcept { return span_; }

private:
    std::string name_;
    SourceSpan span_;
};

// Dimension mismatch raised while evaluating a DSL expression.
class ExprDimensionMismatch : public DimensionMismatch {
public:
    ExprDimensionMismatch(SourceSpan span, const std::string& what)
        : DimensionMismatch(what), span_(span) {}
    SourceSpan span() const noexcept { return span_; }

private:
    SourceSpan span_;
};

class IoError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    FormatError(std::string path, std::string location, const std::string& message)
        : Error(path + ": " + location + ": " + message),
          path_(std::move(path)),
          location_(std::move(location)) {}
    const std::string& path() const noexcept { return path_; }
    const std::string& location() const noexcept { return location_; }

private:
    std::string path_;
    std::string location_;
};

class RefError : public Error {
public:
    explicit RefError(std::string name)
        : Error("unresolved reference '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

}  // namespace crossprod
