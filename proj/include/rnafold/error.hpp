#ifndef RNAFOLD_ERROR_HPP
#define RNAFOLD_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rnafold {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position()` is 1-based (0 when not applicable).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A list of lattice points that is not a legal embedding.
class FoldingError : public Error {
 public:
  enum class Kind { LengthMismatch, SelfIntersection, NonUnitStep };

  FoldingError(Kind kind, std::size_t index, const std::string& what)
      : Error(what), kind_(kind), index_(index) {}
  Kind kind() const noexcept { return kind_; }
  /// 1-based chain index at which the violation was detected.
  std::size_t index() const noexcept { return index_; }

 private:
  Kind kind_;
  std::size_t index_;
};

/// Search size guard tripped.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain an operation is defined on (e.g. non-G/C bases).
class ScopeError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument to a constructor-style operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Reduction layout rejected during parsing or assembly.
class LayoutError : public Error {
 public:
  LayoutError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rnafold

#endif  // RNAFOLD_ERROR_HPP
