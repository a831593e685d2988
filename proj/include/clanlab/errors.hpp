#pragma once

#include <stdexcept>
#include <string>

namespace clanlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define CLANLAB_ERROR_TYPE(Name)            \
  struct Name : Error {                     \
    using Error::Error;                     \
    Name() : Error(#Name) {}                \
  };

CLANLAB_ERROR_TYPE(MalformedSymbol)
CLANLAB_ERROR_TYPE(UnmatchedNat)
CLANLAB_ERROR_TYPE(OddLength)
CLANLAB_ERROR_TYPE(OddSize)
CLANLAB_ERROR_TYPE(BoundExceeded)
CLANLAB_ERROR_TYPE(NotABaseClan)
CLANLAB_ERROR_TYPE(NotRestricted)
CLANLAB_ERROR_TYPE(InvalidPath)
CLANLAB_ERROR_TYPE(NotInBigSect)
CLANLAB_ERROR_TYPE(IndexOutOfRange)
CLANLAB_ERROR_TYPE(SizeMismatch)
CLANLAB_ERROR_TYPE(NotAntisymmetric)
CLANLAB_ERROR_TYPE(NotSquare)
CLANLAB_ERROR_TYPE(NotIsotropic)
CLANLAB_ERROR_TYPE(NotAdmissible)
CLANLAB_ERROR_TYPE(InvalidInvolution)
CLANLAB_ERROR_TYPE(SingularMatrix)
CLANLAB_ERROR_TYPE(ParseError)

#undef CLANLAB_ERROR_TYPE

}  // namespace clanlab
