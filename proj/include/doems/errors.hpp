#pragma once

#include <stdexcept>
#include <string>

namespace doems {

// Precondition or argument-shape violation (dimension mismatch, zero inverse, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text encoding of a point, data set, monomial, polynomial or order.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Linear system over Z_p has no unique solution.
class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedParameters : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CorruptStore : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested catalog layer, file or data set does not exist.
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicatePoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proven structural property failed to hold; indicates a bug, not bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace doems
