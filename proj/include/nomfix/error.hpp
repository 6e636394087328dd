#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nomfix {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& message, std::size_t position)
        : Error("parse error at " + std::to_string(position) + ": " + message), position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// free_names and friends require terms without unknowns.
class GroundnessError : public Error {
  public:
    using Error::Error;
};

class CarrierBoundExceeded : public Error {
  public:
    using Error::Error;
};

class UniverseBoundExceeded : public Error {
  public:
    using Error::Error;
};

class UnboundVariable : public Error {
  public:
    using Error::Error;
};

// A constraint or judgement is not of the shape a translation expects.
class ShapeError : public Error {
  public:
    using Error::Error;
};

}  // namespace nomfix
