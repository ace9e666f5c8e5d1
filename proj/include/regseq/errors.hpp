#pragma once

#include <stdexcept>
#include <string>

namespace regseq {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two entities built over structurally different rings were combined.
class RingMismatchError : public Error {
 public:
  explicit RingMismatchError(const std::string& msg) : Error(msg) {}
};

// Exponent vector / free-module rank lengths disagree.
class ArityError : public Error {
 public:
  explicit ArityError(const std::string& msg) : Error(msg) {}
};

// An operation that requires a non-zero argument received zero.
class ZeroArgumentError : public Error {
 public:
  explicit ZeroArgumentError(const std::string& msg) : Error(msg) {}
};

// A graded-only operation was applied to an ungraded module.
class UngradedError : public Error {
 public:
  explicit UngradedError(const std::string& msg) : Error(msg) {}
};

// A computation exceeded the configured degree cap.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& msg) : Error(msg) {}
};

// A precondition stated by the API contract was violated.
class PrecondError : public Error {
 public:
  explicit PrecondError(const std::string& msg) : Error(msg) {}
};

// A set of generators handed to a syzygy routine is not a Groebner basis.
class NotGroebnerError : public Error {
 public:
  explicit NotGroebnerError(const std::string& msg) : Error(msg) {}
};

// An invariant the library maintains internally failed; a bug or a wrong
// primality assertion upstream.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

// Session / polynomial text could not be parsed. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + msg),
        line_(line),
        col_(col),
        msg_(msg) {}
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& message() const { return msg_; }

 private:
  int line_;
  int col_;
  std::string msg_;
};

// A command referenced an entity name the session does not declare.
class NameError : public Error {
 public:
  explicit NameError(const std::string& msg) : Error(msg) {}
};

}  // namespace regseq
