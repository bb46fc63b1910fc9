#pragma once

#include <stdexcept>
#include <string>

namespace sdvc {

enum class ErrorCode {
    InvalidArgument,
    InvalidWitness,
    InvalidSignature,
    Malformed,
    UnverifiableInput,
    ThresholdExceedsValue,
    UnknownMechanism,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

// Outcome of a verification. Rejections carry a machine-readable reason
// ("malformed", "proof-equation", "pairing-mismatch", "identity-element",
// "response-out-of-range", "bad-equation", "attribute-too-large",
// "e-out-of-range", ...). Accepting results have an empty reason.
struct VerifyResult {
    bool accepted = false;
    std::string reason;

    static VerifyResult ok() { return {true, ""}; }
    static VerifyResult reject(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return accepted; }
};

}  // namespace sdvc
