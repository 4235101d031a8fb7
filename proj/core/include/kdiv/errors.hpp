#pragma once

#include <stdexcept>
#include <string>

namespace kdiv {

/// Malformed input: bad rankings, length mismatches, invalid files or specs.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A candidate embedding whose bisectors coincide or are otherwise not in
/// general position. Callers are expected to resample.
class DegenerateEmbedding : public InputError {
 public:
  using InputError::InputError;
};

/// An exact computation would exceed a configured size budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kdiv
