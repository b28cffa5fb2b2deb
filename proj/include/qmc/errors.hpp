#pragma once

#include <stdexcept>
#include <string>

namespace qmc {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand dimensions do not match the operation's contract.
struct DimensionError : Error {
  using Error::Error;
};

// A projective measurement has no numerical overlap with the state.
struct ZeroSupportError : Error {
  using Error::Error;
};

// A feature column is constant and cannot be min-max scaled.
struct DegenerateFeatureError : Error {
  using Error::Error;
};

// A categorical value falls outside 1..m.
struct InvalidCategoryError : Error {
  using Error::Error;
};

// The superposition of encoded samples cancels to (numerically) zero.
struct DegenerateSuperpositionError : Error {
  using Error::Error;
};

// finalize() called on an accumulator that absorbed no samples.
struct EmptyTrainingError : Error {
  using Error::Error;
};

struct UnknownDatasetError : Error {
  using Error::Error;
};

struct InvalidSplitError : Error {
  using Error::Error;
};

// Malformed file content; message carries the offending line number.
struct ParseError : Error {
  using Error::Error;
};

// File structure (header, fields, magic) does not match the expected schema.
struct SchemaError : Error {
  using Error::Error;
};

// A feature vector mapped to the numerically zero vector.
struct ZeroVectorError : Error {
  using Error::Error;
};

// Inconsistent encoder specification (bad hyperparameters for the kind).
struct SpecError : Error {
  using Error::Error;
};

struct UnsupportedDimensionError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace qmc
