#pragma once

#include <stdexcept>
#include <string>

namespace riskset {

// Mismatched outcome counts or incompatible probability spaces.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameter outside its admissible range.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A declared precondition was not met, e.g. a gauge evaluated on a set
// that does not carry the required structural flag.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The membership oracle behaved inconsistently during a bracketed search.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace riskset
