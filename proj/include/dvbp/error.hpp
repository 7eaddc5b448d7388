#pragma once

#include <stdexcept>
#include <string>

namespace dvbp {

enum class ErrorCode {
    Usage,        // invalid argument or precondition
    Parse,        // malformed text input
    OracleLimit,  // exact solver refused: too many active items
    Overflow,     // 128-bit rational range exceeded
    Io,           // file could not be read or written
    Constraint,   // adversarial parameter constraint violated
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace dvbp
