#pragma once

#include <stdexcept>
#include <string>

namespace wqg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WQG_DEFINE_ERROR(Name)                   \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what)       \
        : Error(std::string(#Name ": ") + what) {} \
  };

WQG_DEFINE_ERROR(FieldMismatch)
WQG_DEFINE_ERROR(DivisionByZero)
WQG_DEFINE_ERROR(DimensionMismatch)
WQG_DEFINE_ERROR(InvalidInput)
WQG_DEFINE_ERROR(NotFrobenius)
WQG_DEFINE_ERROR(NonInvertibleT)
WQG_DEFINE_ERROR(NotCommutative)
WQG_DEFINE_ERROR(NotSeparable)
WQG_DEFINE_ERROR(BadNormalization)
WQG_DEFINE_ERROR(Singular)
WQG_DEFINE_ERROR(BadBase)
WQG_DEFINE_ERROR(ProjectorNotIdempotent)
WQG_DEFINE_ERROR(AxiomFailure)
WQG_DEFINE_ERROR(NotInvertible)
WQG_DEFINE_ERROR(BadTwist)
WQG_DEFINE_ERROR(NotAHomomorphism)
WQG_DEFINE_ERROR(IllDefined)
WQG_DEFINE_ERROR(InvalidGroupoid)
WQG_DEFINE_ERROR(NotAssociative)
WQG_DEFINE_ERROR(ParseError)
WQG_DEFINE_ERROR(SchemaError)

#undef WQG_DEFINE_ERROR

}  // namespace wqg
