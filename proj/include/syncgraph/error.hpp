#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace syncgraph {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidEdge : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class EdgeExists : public Error {
 public:
  using Error::Error;
};

class EdgeMissing : public Error {
 public:
  using Error::Error;
};

class InvalidSubset : public Error {
 public:
  using Error::Error;
};

/// Edge-list parse failure; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// The eigenratio needs lambda2 > 0, i.e. a connected graph.
class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class DeskScaleExceeded : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace syncgraph
