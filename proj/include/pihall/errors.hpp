#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pihall {

// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class PointOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

// Thrown when an enumeration would exceed the element cap; carries the
// actual group order as a decimal string.
class OrderExceedsCap : public Error {
 public:
  OrderExceedsCap(const std::string& order, std::uint64_t cap)
      : Error("group order " + order + " exceeds element cap " +
              std::to_string(cap)),
        order_(order) {}
  const std::string& order() const { return order_; }

 private:
  std::string order_;
};

class IndexExceedsCap : public Error {
 public:
  using Error::Error;
};

class ElementNotInGroup : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class PrimeDoesNotDivideOrder : public Error {
 public:
  using Error::Error;
};

class DefiningCharacteristicInPi : public Error {
 public:
  using Error::Error;
};

class EvenPrimeInPi : public Error {
 public:
  using Error::Error;
};

// Syntax error in a group expression; offset is a byte position into the
// input string.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class FileFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace pihall
