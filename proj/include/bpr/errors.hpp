#pragma once

#include <stdexcept>
#include <string>

namespace bpr {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a belief update sees zero posterior mass for every type,
// which signals a mismatch between the signal and the trained model space.
struct AllLikelihoodsZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptySequence : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FamilyMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaVersionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularKernel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bpr
