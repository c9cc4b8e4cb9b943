#pragma once

#include <stdexcept>
#include <string>

namespace ts3c {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values (k out of range, mismatched lengths, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// Unreadable/unwritable files.
struct IoError : Error {
    using Error::Error;
};

// Non-numeric token while reading a data file; carries the line number.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
    std::size_t line_number;
};

// Structurally broken input (e.g. rows of different lengths in one file).
struct FormatError : Error {
    using Error::Error;
};

// A partition on which an index is undefined (coincident centroids, ...).
struct DegeneratePartitionError : Error {
    DegeneratePartitionError(const std::string& msg, std::string kind_)
        : Error(msg), kind(std::move(kind_)) {}
    std::string kind;
};

// End-to-end run could not produce a result (e.g. every sweep entry skipped).
struct PipelineError : Error {
    using Error::Error;
};

}  // namespace ts3c
