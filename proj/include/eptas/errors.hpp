#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eptas {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message)
      : Error("line " + std::to_string(line) + (field.empty() ? "" : ", " + field) +
              ": " + message),
        line_(line),
        field_(std::move(field)) {}

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidSchedule : public Error {
 public:
  using Error::Error;
};

class Unschedulable : public Error {
 public:
  using Error::Error;
};

/// Budget errors: the caller picked parameters too demanding for the instance.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NodeLimitExceeded : public BudgetExceeded {
 public:
  explicit NodeLimitExceeded(std::size_t limit)
      : BudgetExceeded("branch-and-bound node budget of " + std::to_string(limit) +
                       " exhausted"),
        limit_(limit) {}
  [[nodiscard]] std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

class ConfigExplosion : public BudgetExceeded {
 public:
  explicit ConfigExplosion(std::size_t limit)
      : BudgetExceeded("more than " + std::to_string(limit) + " configurations"),
        limit_(limit) {}
  [[nodiscard]] std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

class LimitExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

/// A broken internal invariant (solver bug), never an input condition.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eptas
