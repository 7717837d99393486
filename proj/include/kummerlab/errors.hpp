#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kummerlab {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define KUMMERLAB_DEFINE_ERROR(Name)                                 \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& what) : Error(what) {}     \
    }

KUMMERLAB_DEFINE_ERROR(NotAnOddPrime);
KUMMERLAB_DEFINE_ERROR(NotAPrime);
KUMMERLAB_DEFINE_ERROR(BadPrecision);
KUMMERLAB_DEFINE_ERROR(ContextMismatch);
KUMMERLAB_DEFINE_ERROR(NotAUnit);
KUMMERLAB_DEFINE_ERROR(BadGaloisIndex);
KUMMERLAB_DEFINE_ERROR(DivisibleByP);
KUMMERLAB_DEFINE_ERROR(PrecisionTooLow);
KUMMERLAB_DEFINE_ERROR(NotAPthPower);
KUMMERLAB_DEFINE_ERROR(WildRamification);
KUMMERLAB_DEFINE_ERROR(BadDegree);
KUMMERLAB_DEFINE_ERROR(GeneratorNotPrimar);
KUMMERLAB_DEFINE_ERROR(TooLarge);
KUMMERLAB_DEFINE_ERROR(BadIndex);
KUMMERLAB_DEFINE_ERROR(IntersectionNonTrivial);
KUMMERLAB_DEFINE_ERROR(CertificateImpossible);
KUMMERLAB_DEFINE_ERROR(OutOfConfiguredRange);

#undef KUMMERLAB_DEFINE_ERROR

// Parse failure carrying the byte offset of the offending position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace kummerlab
