#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace caterpillar {

// Machine-readable failure categories, mirrored by the CLI's error envelope.
enum class ErrorCode {
  SizeTooSmall,
  CapExceeded,
  GuardExceeded,
  NoConvergence,
  KTooLargeForTruncation,
  NotAv132,
  IndexOutOfRange,
  ParseError,
  NameCountMismatch,
  InvalidInput,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Newick syntax failure; carries the byte offset of the offending input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& expected)
      : Error(ErrorCode::ParseError,
              "parse error at byte " + std::to_string(offset) + ": " + expected),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

// Input permutation contains a 132 pattern; positions are 0-based.
class NotAv132Error : public Error {
 public:
  NotAv132Error(std::size_t i, std::size_t j, std::size_t k)
      : Error(ErrorCode::NotAv132,
              "permutation contains a 132 pattern at positions " +
                  std::to_string(i + 1) + ", " + std::to_string(j + 1) + ", " +
                  std::to_string(k + 1)),
        i_(i), j_(j), k_(k) {}

  std::size_t pos1() const { return i_; }
  std::size_t pos2() const { return j_; }
  std::size_t pos3() const { return k_; }

 private:
  std::size_t i_, j_, k_;
};

}  // namespace caterpillar
