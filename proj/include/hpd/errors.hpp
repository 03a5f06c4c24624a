#pragma once

#include <stdexcept>
#include <string>

namespace hpd {

// Base class for all structured failures; `code()` is stable and
// machine-readable (mirrored into CLI JSON error output).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define HPD_ERROR(Name)                                                 \
    class Name : public Error {                                        \
    public:                                                             \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

HPD_ERROR(ZeroDenominator);
HPD_ERROR(UnboundVariable);
HPD_ERROR(OrderMismatch);
HPD_ERROR(ChartMismatch);
HPD_ERROR(DegreeZero);
HPD_ERROR(DegreeMismatch);
HPD_ERROR(MissingInverse);
HPD_ERROR(InvalidParams);
HPD_ERROR(UnsupportedAtlas);
HPD_ERROR(InhomogeneousBase);
HPD_ERROR(NotACocycle);
HPD_ERROR(OutOfTruncation);
HPD_ERROR(NotSurjective);
HPD_ERROR(UnsolvableOrder);
HPD_ERROR(PrerequisiteViolated);
HPD_ERROR(InternalError);

#undef HPD_ERROR

// Parse failures carry the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, size_t offset)
        : Error("ParseError", what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

} // namespace hpd
