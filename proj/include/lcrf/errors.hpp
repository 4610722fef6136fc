#ifndef LCRF_ERRORS_HPP
#define LCRF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lcrf {

// Base class for all recoverable library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration: empty training corpus, bad label set, too few
// experiment domains, out-of-range hyperparameters.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Anything wrong with user-supplied data files.
class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

// Malformed input file; always carries the line it was detected on.
class ParseError : public DataError {
 public:
  ParseError(const std::string& path, long line, const std::string& msg)
      : DataError(path + ":" + std::to_string(line) + ": " + msg),
        line_(line) {}

  long line() const { return line_; }

 private:
  long line_;
};

// Model or store file whose header/content does not match what the
// current code writes.
class LoadError : public DataError {
 public:
  explicit LoadError(const std::string& msg) : DataError(msg) {}
};

// Non-finite objective or gradient during optimization.
class TrainingDivergenceError : public Error {
 public:
  TrainingDivergenceError(int iteration, const std::string& msg)
      : Error("iteration " + std::to_string(iteration) + ": " + msg),
        iteration_(iteration) {}

  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

// Caller broke a documented precondition (length mismatch, missing gold
// labels, duplicate domain id, ...).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& msg)
      : std::logic_error(msg) {}
};

}  // namespace lcrf

#endif  // LCRF_ERRORS_HPP
