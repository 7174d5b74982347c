#pragma once

#include <stdexcept>
#include <string>

namespace formcone {

// Malformed input: syntax errors, unknown names, invalid characteristic.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition failed (ring mismatch, zero divisor, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured step budget was exhausted. Never a wrong answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency assertion failed; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define FORMCONE_ASSERT(cond, msg)                                          \
  do {                                                                      \
    if (!(cond))                                                            \
      throw ::formcone::InternalError(std::string(__FILE__) + ":" +         \
                                      std::to_string(__LINE__) + ": " + (msg)); \
  } while (0)

}  // namespace formcone
