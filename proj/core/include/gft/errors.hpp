#pragma once

#include <stdexcept>
#include <string>

namespace gft {

/// Parameter outside the domain of a class or series definition.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The truncation rule could not certify the tail before hitting n_max.
class TruncationNotReached : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MissingRParams : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class InvalidTolerance : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace gft
