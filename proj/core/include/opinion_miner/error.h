#ifndef OPINION_MINER_ERROR_H_
#define OPINION_MINER_ERROR_H_

#include <stdexcept>
#include <string>

namespace opinion_miner {

// Base class for every error the library raises. Callers that only care
// about "something went wrong in the pipeline" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. Carries the offending path and 1-based line number
// (0 when the problem is not tied to a line).
class ParseError : public Error {
 public:
  ParseError(std::string path, int line, const std::string &what)
      : Error(path + (line > 0 ? ":" + std::to_string(line) : "") + ": " +
              what),
        path_(std::move(path)),
        line_(line) {}

  const std::string &path() const { return path_; }
  int line() const { return line_; }

 private:
  std::string path_;
  int line_;
};

// A file or directory that must exist could not be read.
class IoError : public Error {
 public:
  using Error::Error;
};

// Operation called outside its domain (empty input, missing class, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace opinion_miner

#endif  // OPINION_MINER_ERROR_H_
