#pragma once

#include <stdexcept>
#include <string>

namespace uigram {

/// Unrecoverable problem with input data: missing files, malformed JSON,
/// duplicate ids, impossible splits, prompt leakage. Maps to exit code 2
/// in the CLI.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Failure talking to a generation backend after retries are exhausted.
/// Maps to exit code 3 in the CLI.
class TransportError : public std::runtime_error {
 public:
  explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace uigram
