#pragma once

#include <stdexcept>
#include <string>

namespace gam {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define GAMMA_DEFINE_ERROR(Name)                  \
  struct Name : Error {                           \
    explicit Name(const std::string& msg = #Name) \
        : Error(std::string(#Name) + ": " + msg) {} \
  }

GAMMA_DEFINE_ERROR(DegreeOutOfRange);
GAMMA_DEFINE_ERROR(NonIrreducible);
GAMMA_DEFINE_ERROR(DivisionByZero);
GAMMA_DEFINE_ERROR(ZeroElement);
GAMMA_DEFINE_ERROR(OddDegree);
GAMMA_DEFINE_ERROR(SingularMatrix);
GAMMA_DEFINE_ERROR(FieldMismatch);
GAMMA_DEFINE_ERROR(CapExceeded);
GAMMA_DEFINE_ERROR(DegenerateValency);
GAMMA_DEFINE_ERROR(NonIntegralComponents);
GAMMA_DEFINE_ERROR(VertexEscapesComponent);
GAMMA_DEFINE_ERROR(NotAutomorphism);
GAMMA_DEFINE_ERROR(NotIsomorphism);
GAMMA_DEFINE_ERROR(GirthTooSmall);
GAMMA_DEFINE_ERROR(Acyclic);
GAMMA_DEFINE_ERROR(BadClassSize);
GAMMA_DEFINE_ERROR(StructureViolation);
GAMMA_DEFINE_ERROR(BadPrime);
GAMMA_DEFINE_ERROR(UnknownName);
GAMMA_DEFINE_ERROR(UnknownSuite);
GAMMA_DEFINE_ERROR(IoError);
GAMMA_DEFINE_ERROR(ParseError);

#undef GAMMA_DEFINE_ERROR

}  // namespace gam
