#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace crystalmorse {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotInRootLattice : public Error {
 public:
  using Error::Error;
};

class NegativeMultiplicity : public Error {
 public:
  using Error::Error;
};

class NonDominantWeight : public Error {
 public:
  using Error::Error;
};

class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(const std::string& what, std::size_t partial)
      : Error(what), partial_count(partial) {}
  std::size_t partial_count;
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

class OracleCapExceeded : public Error {
 public:
  using Error::Error;
};

class OperatorUndefinedAt : public Error {
 public:
  OperatorUndefinedAt(std::uint32_t vertex_id, int color)
      : Error("f_" + std::to_string(color) + " undefined at vertex " +
              std::to_string(vertex_id)),
        vertex(vertex_id),
        color(color) {}
  std::uint32_t vertex;
  int color;
};

class NotCertified : public Error {
 public:
  using Error::Error;
};

class NotAnomalous : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace crystalmorse
