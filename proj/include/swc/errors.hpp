#pragma once

#include <stdexcept>
#include <string>

namespace swc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidGenerator : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotCrystallographicPair : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct NoFacets : Error {
  using Error::Error;
};
struct NotAFlat : Error {
  using Error::Error;
};
struct NotComposable : Error {
  using Error::Error;
};
struct NotInD : Error {
  using Error::Error;
};
struct NotATree : Error {
  using Error::Error;
};
struct NoPartner : Error {
  using Error::Error;
};
struct NotSpecial : Error {
  using Error::Error;
};
struct NotLongestElement : Error {
  using Error::Error;
};
struct NotFlippable : Error {
  using Error::Error;
};
struct NotDecomposable : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace swc
