#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace homotopica {

// Base class for all library errors. name() is the stable identifier the CLI
// prints and tests match on.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define HOMOTOPICA_DEFINE_ERROR(NAME)                                     \
  class NAME : public Error {                                             \
   public:                                                                \
    explicit NAME(const std::string& message) : Error(#NAME, message) {}  \
  }

HOMOTOPICA_DEFINE_ERROR(RankDeficient);
HOMOTOPICA_DEFINE_ERROR(NotCentered);
HOMOTOPICA_DEFINE_ERROR(NotWhitened);
HOMOTOPICA_DEFINE_ERROR(ConvergenceFailure);
HOMOTOPICA_DEFINE_ERROR(Singular);
HOMOTOPICA_DEFINE_ERROR(ShapeMismatch);
HOMOTOPICA_DEFINE_ERROR(OddExtent);
HOMOTOPICA_DEFINE_ERROR(BlockOverflow);
HOMOTOPICA_DEFINE_ERROR(UnreadableImage);
HOMOTOPICA_DEFINE_ERROR(DegenerateLoading);
HOMOTOPICA_DEFINE_ERROR(PreconditionViolated);
HOMOTOPICA_DEFINE_ERROR(IoFailure);

#undef HOMOTOPICA_DEFINE_ERROR

}  // namespace homotopica
