#pragma once

#include <stdexcept>
#include <string>

namespace simpdeg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex list that does not describe a simplex (empty, or repeated vertex).
class InvalidSimplex : public Error {
 public:
  explicit InvalidSimplex(const std::string& what) : Error("InvalidSimplex: " + what) {}
};

/// A dimension or degree parameter outside the admissible range.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error("DimensionError: " + what) {}
};

class NotInComplex : public Error {
 public:
  explicit NotInComplex(const std::string& what) : Error("NotInComplex: " + what) {}
};

/// Operation needs a closed complex but got an explicit one (or vice versa).
class ModeError : public Error {
 public:
  explicit ModeError(const std::string& what) : Error("ModeError: " + what) {}
};

class ParamError : public Error {
 public:
  explicit ParamError(const std::string& what) : Error("ParamError: " + what) {}
};

/// Malformed dataset files. `line` is 1-based, 0 when not applicable.
class FormatError : public Error {
 public:
  FormatError(const std::string& file, std::size_t line, const std::string& what)
      : Error("FormatError: " + file + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        file_(file),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

class EmptyDataset : public Error {
 public:
  explicit EmptyDataset(const std::string& what) : Error("EmptyDataset: " + what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("IoError: " + what) {}
};

}  // namespace simpdeg
