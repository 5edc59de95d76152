#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace colorheis {

/// A requested operation has no exact coefficient region left
/// (e.g. the product window K_out would be negative).
struct WindowUnderflow : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// Composition or exponential of a series whose inner argument has a
/// non-zero constant term.
struct CompositionConstantTerm : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// A parameter series required to be odd has a non-zero even coefficient.
struct NotOddSeries : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// The scalar parameter of the three-relation family must be non-zero.
struct ZeroConstant : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// A solver bound (no-go bidegree) was exceeded.
struct BoundExceeded : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// Surface-syntax parse failure, with byte offset and the expected tokens.
struct ParseError : std::runtime_error
{
	std::size_t offset;
	std::string expected;

	ParseError(const std::string &msg, std::size_t off, std::string exp)
	    : std::runtime_error(msg + " at offset " + std::to_string(off) +
	                         " (expected " + exp + ")"),
	      offset(off), expected(std::move(exp))
	{}
};

} // namespace colorheis
