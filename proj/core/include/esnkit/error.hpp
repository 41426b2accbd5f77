#ifndef ESNKIT_ERROR_HPP
#define ESNKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "esnkit/types.hpp"

namespace esnkit {

// Every mathematical failure carries a stable code (e.g. "NotAssociative",
// "OG3Violation", "MT2Violation") and the least witness indices that
// pinpoint the violation.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string code, const std::string& what, std::vector<Idx> witness = {})
      : std::runtime_error(code + ": " + what),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const std::vector<Idx>& witness() const noexcept { return witness_; }

 private:
  std::string code_;
  std::vector<Idx> witness_;
};

}  // namespace esnkit

#endif  // ESNKIT_ERROR_HPP
