#pragma once

#include <stdexcept>
#include <string>

namespace fillings {

enum class ErrorCode {
  Parse,
  AlphabetMismatch,
  OracleIndecisive,
  BallTooSmall,
  NotSpanning,
  TooManyTrees,
  TooManyCells,
  InvalidSequence,
  InvalidShelling,
  NotNullHomotopic,
  OutOfRange,
  SymbolCollision,
  UnknownPreset,
  Unsupported,
  Io,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace fillings
