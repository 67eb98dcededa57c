#pragma once

#include <stdexcept>
#include <string>

namespace helixcipher {

/// Base class for all toolkit errors. Subclasses map onto the process
/// exit codes documented in the README: validation 2, precondition 3,
/// I/O 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 1; }
};

/// Malformed or out-of-contract input: bad symbols, empty files,
/// unparseable tables, unknown fixture names, missing input paths.
class ValidationError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

/// A pipeline stage invoked outside its precondition, e.g. a
/// class/letter cardinality mismatch or an out-of-range window request.
class PreconditionError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

/// Filesystem failure while reading or writing.
class IoError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

}  // namespace helixcipher
