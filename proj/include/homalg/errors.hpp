#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homalg {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotACycle : public Error {
 public:
  using Error::Error;
};

class NotAComplex : public Error {
 public:
  using Error::Error;
};

class IllDefinedHomomorphism : public Error {
 public:
  using Error::Error;
};

class InvalidGroup : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Requested object would exceed the configured size budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t requested, std::uint64_t budget)
      : Error(what + ": size " + std::to_string(requested) + " exceeds budget " +
              std::to_string(budget)),
        requested_(requested),
        budget_(budget) {}

  std::uint64_t requested() const { return requested_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t requested_;
  std::uint64_t budget_;
};

class InfiniteGroup : public Error {
 public:
  using Error::Error;
};

class OddOrder : public Error {
 public:
  using Error::Error;
};

class InadmissiblePair : public Error {
 public:
  using Error::Error;
};

class WellDefinednessFailure : public Error {
 public:
  using Error::Error;
};

class PresentationMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

}  // namespace homalg
