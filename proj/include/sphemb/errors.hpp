#pragma once

#include <stdexcept>
#include <string>

namespace sphemb {

// Malformed input: bad parameters, dimension mismatch, foreign labels.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but the requested computation is not defined for it
// (non-integral pairing, provisional model, out-of-scope family).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Randomized checks disagreed across trials.
struct OracleInstability : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sphemb
