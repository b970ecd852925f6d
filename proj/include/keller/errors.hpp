#pragma once

// Error taxonomy for the whole library. Every throwing operation documents
// which of these it can raise; everything derives from keller::Error so
// callers can catch broadly.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace keller {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// algebra
struct NonUnivariateInput : Error {
  explicit NonUnivariateInput(const std::string& msg) : Error(msg) {}
};
struct NonConformingInput : Error {
  explicit NonConformingInput(const std::string& msg) : Error(msg) {}
};

// polymatrix
struct SizeGuardExceeded : Error {
  explicit SizeGuardExceeded(const std::string& msg) : Error(msg) {}
};
struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};
struct LengthMismatch : Error {
  explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};
struct DegreeExceedsFormal : Error {
  explicit DegreeExceedsFormal(const std::string& msg) : Error(msg) {}
};

// keller
struct ZeroPartialX : Error {
  explicit ZeroPartialX(const std::string& msg) : Error(msg) {}
};
struct DegenerateQ : Error {
  explicit DegenerateQ(const std::string& msg) : Error(msg) {}
};
struct BadIndex : Error {
  explicit BadIndex(const std::string& msg) : Error(msg) {}
};
struct NotKeller : Error {
  explicit NotKeller(const std::string& msg) : Error(msg) {}
};
struct ReconstructionMismatch : Error {
  explicit ReconstructionMismatch(const std::string& msg) : Error(msg) {}
};

// oracles
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// cli
struct SyntaxError : Error {
  std::size_t pos;
  SyntaxError(const std::string& msg, std::size_t at)
      : Error(msg + " (at offset " + std::to_string(at) + ")"), pos(at) {}
};
struct NotMonicInY : Error {
  explicit NotMonicInY(const std::string& msg) : Error(msg) {}
};

}  // namespace keller
