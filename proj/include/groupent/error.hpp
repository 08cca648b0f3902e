#pragma once

#include <stdexcept>
#include <string>

namespace groupent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document: bad JSON, missing field, wrong field type.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Function, blocks, map or table do not live on compatible groups.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// Matrix or table dimensions inconsistent with what the group dictates.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed (input not PD, not normalized, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace groupent
