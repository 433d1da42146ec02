#ifndef SPECTRA_ERROR_HPP
#define SPECTRA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spectra {

enum class ErrorCode {
    InvalidInput,
    DimensionMismatch,
    NonCommutingTuple,
    SpectrumNotSplit,
    CapExceeded,
    NotStabilized,
    InfiniteDimensional,
    NoStandardRepresentation,
    EmptyVariety,
    PointNotOnVariety,
    CharTwoUnsupported,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace spectra

#endif
