#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace mqlat {

/// Domain error with a stable machine-readable kind tag plus optional details.
/// Kinds used across the library: NotSquarefree, DegenerateDegree, Unsupported,
/// FieldMismatch, IndexOutOfRange, NotTotallyReal, ZeroElement, WrongBasisSize,
/// ZeroGenerator, RankDeficient, BoxTooSmall, NonPositiveRadius, NotIntegral,
/// QuotientTooLarge, ZeroDivisor, NotInDualLattice, ZeroCandidate, DomainError,
/// UnknownExample, ParseError.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  Error& with(const std::string& key, std::string value) {
    detail_[key] = std::move(value);
    return *this;
  }

  const std::string& kind() const { return kind_; }
  const std::map<std::string, std::string>& detail() const { return detail_; }

 private:
  std::string kind_;
  std::map<std::string, std::string> detail_;
};

}  // namespace mqlat
