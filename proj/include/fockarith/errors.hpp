#pragma once

#include <stdexcept>
#include <string>

namespace fockarith {

// Base for every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FOCKARITH_ERROR(Name)                 \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(#Name ": " + what) {}         \
  };

FOCKARITH_ERROR(DuplicateSite)
FOCKARITH_ERROR(InvalidDigit)
FOCKARITH_ERROR(InvalidSymbol)
FOCKARITH_ERROR(NonCanonical)
FOCKARITH_ERROR(NonContiguousSites)
FOCKARITH_ERROR(NegativeZero)
FOCKARITH_ERROR(NotKAdic)
FOCKARITH_ERROR(ParseError)
FOCKARITH_ERROR(UnboundFamily)
FOCKARITH_ERROR(UnboundAdjointFamily)
FOCKARITH_ERROR(RecursionOverflow)
FOCKARITH_ERROR(MalformedPair)
FOCKARITH_ERROR(MalformedTriple)
FOCKARITH_ERROR(DomainError)
FOCKARITH_ERROR(UnmappedSite)
FOCKARITH_ERROR(UnmappedSymbol)
FOCKARITH_ERROR(NonInjectiveMap)
FOCKARITH_ERROR(EmptyResult)
FOCKARITH_ERROR(InsufficientSamples)

#undef FOCKARITH_ERROR

}  // namespace fockarith
