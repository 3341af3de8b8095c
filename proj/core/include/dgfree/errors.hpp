#pragma once

#include <stdexcept>
#include <string>

namespace dgfree {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct NotCrisscross : Error {
  NotCrisscross() : Error("tuple is not crisscross") {}
  using Error::Error;
};

struct DomainError : Error {  // parameter constraint violated, singular witness, ...
  using Error::Error;
};

struct Unsupported : Error {
  using Error::Error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

}  // namespace dgfree
