#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sonohaptics {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed JSON or a structurally invalid document.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A scene document that parsed but violates an invariant. Carries the
/// offending object id when one applies.
class ValidationError : public Error {
public:
    ValidationError(std::string object_id, const std::string& what)
        : Error(object_id.empty() ? what : "object '" + object_id + "': " + what),
          object_id_(std::move(object_id))
    {
    }

    const std::string& object_id() const noexcept { return object_id_; }

private:
    std::string object_id_;
};

class EmptySceneError : public Error {
public:
    EmptySceneError() : Error("scene has no visible objects") {}
};

class TextureError : public Error {
public:
    using Error::Error;
};

class EngineError : public Error {
public:
    using Error::Error;
};

class InvalidCueError : public Error {
public:
    using Error::Error;
};

/// Trace or message parse failure with a 1-based line number.
class TraceError : public Error {
public:
    TraceError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace sonohaptics
