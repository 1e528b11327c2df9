#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace latlab {

// Domain error with a stable machine-readable code. The CLI maps these to
// exit status 1 and reports the code verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct NotEvenSelfDual : Error {
  explicit NotEvenSelfDual(const std::string& w) : Error("NotEvenSelfDual", w) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& w) : Error("DimensionMismatch", w) {}
};
struct DegenerateForm : Error {
  explicit DegenerateForm(const std::string& w) : Error("DegenerateForm", w) {}
};
struct NotARoot : Error {
  explicit NotARoot(const std::string& w) : Error("NotARoot", w) {}
};
struct NotUnimodular : Error {
  explicit NotUnimodular(const std::string& w) : Error("NotUnimodular", w) {}
};
struct NotCoprime : Error {
  explicit NotCoprime(const std::string& w) : Error("NotCoprime", w) {}
};
struct NotNormTwo : Error {
  explicit NotNormTwo(const std::string& w) : Error("NotNormTwo", w) {}
};
struct ZeroMatrix : Error {
  explicit ZeroMatrix(const std::string& w) : Error("ZeroMatrix", w) {}
};

}  // namespace latlab
