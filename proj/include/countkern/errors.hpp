#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace countkern {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Malformed graph file, context document or decimal count.
class ParseError : public Error {
public:
	ParseError(std::size_t line, const std::string &what)
	    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
	explicit ParseError(const std::string &what) : Error(what), line_(0) {}

	/// 1-based line number, or 0 when the error is not tied to a line.
	std::size_t line() const { return line_; }

private:
	std::size_t line_;
};

/// An oracle refused an input whose enumeration space is too large.
class SizeError : public Error {
public:
	using Error::Error;
};

/// Argument outside the domain of a mathematical operation.
class DomainError : public Error {
public:
	using Error::Error;
};

/// A lift or extraction was handed a count inconsistent with its context.
class IntegrityError : public Error {
public:
	using Error::Error;
};

class CompositionError : public Error {
public:
	using Error::Error;
};

/// Lift context does not belong to the compression or instance it is used with.
class ProtocolError : public Error {
public:
	using Error::Error;
};

class PreconditionError : public Error {
public:
	using Error::Error;
};

/// false_twin_blowup was asked to blow up two adjacent vertices.
class UnsupportedBlowupError : public Error {
public:
	using Error::Error;
};

} // namespace countkern
