#pragma once

#include <stdexcept>
#include <string>

namespace rtc {

/// Invalid argument outside the supported domain (bad exponent, index, gamma range).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Adaptive quadrature exhausted its subdivision budget before reaching the tolerance.
class NonConvergence : public std::runtime_error {
public:
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// A denominator determinant/cofactor fell below the configured floor.
class SingularSystem : public std::runtime_error {
public:
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

/// Recurrence-built table entry disagrees with its direct quadrature value.
class RecurrenceMismatch : public std::runtime_error {
public:
  explicit RecurrenceMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// A combination that must vanish identically came out non-zero.
class IdentityViolation : public std::runtime_error {
public:
  explicit IdentityViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Requested a table entry that was never built.
class MissingTheta : public std::out_of_range {
public:
  explicit MissingTheta(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace rtc
