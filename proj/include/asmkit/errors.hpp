#ifndef ASMKIT_ERRORS_HPP
#define ASMKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace asmkit {

// Raised by field arithmetic when dividing by (or inverting) zero.
class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// A rational function was evaluated at one of its poles. Formula-level code
// converts DivisionByZero into this, so catching DivisionByZero catches both.
class PoleError : public DivisionByZero {
 public:
  explicit PoleError(const std::string& what) : DivisionByZero(what) {}
};

// Exact polynomial division left a nonzero remainder.
class InexactDivision : public std::runtime_error {
 public:
  explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

// A requested size exceeds the configured enumeration/oracle limit.
class CapExceeded : public std::out_of_range {
 public:
  explicit CapExceeded(const std::string& what) : std::out_of_range(what) {}
};

// Operands live over different variable lists or fields.
class DomainMismatch : public std::invalid_argument {
 public:
  explicit DomainMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace asmkit

#endif
