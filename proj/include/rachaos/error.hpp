#pragma once

#include <stdexcept>
#include <string>

namespace rachaos {

// Base class for all library errors. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define RACHAOS_ERROR_TYPE(Name, default_message)                     \
    class Name : public Error {                                      \
    public:                                                           \
        Name() : Error(default_message) {}                            \
        explicit Name(const std::string& what) : Error(what) {}       \
    }

RACHAOS_ERROR_TYPE(EmptyImage, "image has no pixels");
RACHAOS_ERROR_TYPE(EmptySequence, "sequence is empty");
RACHAOS_ERROR_TYPE(SizeMismatch, "sizes do not match");
RACHAOS_ERROR_TYPE(DimensionMismatch, "image dimensions do not match");
RACHAOS_ERROR_TYPE(MalformedKey, "malformed key");
RACHAOS_ERROR_TYPE(SeriesTooShort, "series is too short");
RACHAOS_ERROR_TYPE(DegenerateSeries, "series is degenerate");
RACHAOS_ERROR_TYPE(NonFiniteState, "iteration produced a non-finite state");
RACHAOS_ERROR_TYPE(UnsupportedFormat, "unsupported image format");
RACHAOS_ERROR_TYPE(TruncatedData, "truncated data");
RACHAOS_ERROR_TYPE(OutOfBounds, "region out of bounds");
RACHAOS_ERROR_TYPE(ZeroVariance, "zero variance: correlation undefined");

#undef RACHAOS_ERROR_TYPE

}  // namespace rachaos
