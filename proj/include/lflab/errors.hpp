#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lflab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or inconsistent construction parameters; the message names the violated clause.
struct ParamError : Error {
    using Error::Error;
};

// A quantity became indistinguishable from zero at the working precision.
struct PrecisionError : Error {
    std::int64_t bound;  // the series is zero mod pi^bound
    explicit PrecisionError(std::int64_t bound_, const std::string& msg)
        : Error(msg), bound(bound_) {}
};

struct RootError : Error {
    enum class Code { valuation, residue };
    Code code;
    RootError(Code code_, const std::string& msg) : Error(msg), code(code_) {}
};

struct SubfieldError : Error {
    using Error::Error;
};

struct SupportError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

// A certified theorem-level fact failed to hold; never continue past this.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace lflab
