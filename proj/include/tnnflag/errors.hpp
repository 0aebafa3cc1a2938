#pragma once

#include <stdexcept>
#include <string>

namespace tnnflag {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands carry different semifield tags or different root data.
class InstanceMismatch : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (e.g. m_value(i, i)).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: non-reduced word, bad parameter count, parse failure.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Two words or elements that were required to agree do not.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class OrderViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedFolding : public Error {
 public:
  using Error::Error;
};

class UnsupportedRealization : public Error {
 public:
  using Error::Error;
};

class NoBraidRelation : public Error {
 public:
  using Error::Error;
};

class NoFieldEmbedding : public Error {
 public:
  using Error::Error;
};

class NotInImage : public Error {
 public:
  using Error::Error;
};

class FactorizationFailure : public Error {
 public:
  using Error::Error;
};

/// A computed coordinate fell outside the semifield (zero, negative, or a
/// J+ slot that is not 1).
class NotInNonnegativePart : public Error {
 public:
  using Error::Error;
};

}  // namespace tnnflag
