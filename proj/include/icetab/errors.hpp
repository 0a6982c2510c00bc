#ifndef ICETAB_ERRORS_HPP
#define ICETAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace icetab {

// Malformed caller input: bad partitions, payloads that fail validation,
// dimension mismatches.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance exceeds a hard enumeration bound.
class SizeLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural guarantee of the maps failed on valid input; always a bug,
// never a user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace icetab

#endif
