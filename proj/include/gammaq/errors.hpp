// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#pragma once

#include <stdexcept>
#include <string>

namespace gammaq {

/// Base class for all errors raised by the library.  Every error carries a
/// human-readable message; subclasses indicate how the caller should react.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed user input: unparsable quiver/word/complex descriptions,
/// out-of-range options, inconsistent JSON.  CLI exit code 2.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Structurally invalid mathematical data: inhomogeneous elements, degree or
/// weight mismatches, Maurer-Cartan failures, non-composable paths.  These
/// indicate a bug in calling code rather than in user input.
class InvalidDataError : public Error {
public:
    explicit InvalidDataError(const std::string& msg) : Error(msg) {}
};

/// A computation needed more of the weight window than the configuration
/// allows, and enlarging it up to the retry limit did not help.  CLI exit
/// code 3.  The message names the operation and the window that was tried.
class WindowError : public Error {
public:
    explicit WindowError(const std::string& msg) : Error(msg) {}
};

/// A mutation was refused, e.g. because approximation multiplicities did not
/// stabilise when the weight window was varied.
class MutationError : public Error {
public:
    explicit MutationError(const std::string& msg) : Error(msg) {}
};

} // namespace gammaq
