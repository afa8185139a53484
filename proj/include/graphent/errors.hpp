#pragma once

#include <stdexcept>

namespace graphent {

// Malformed input: bad parameters, invalid graphs, unparsable files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation that could not produce a finite or converged result.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace graphent
