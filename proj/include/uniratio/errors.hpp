#pragma once

#include <stdexcept>
#include <string>

namespace uniratio {

/// Invalid spec/family data or malformed input (CLI exit code 1).
class SpecError : public std::invalid_argument {
  public:
    explicit SpecError(const std::string& what) : std::invalid_argument(what) {}
};

/// |f2| == |E| identically; the limit ratio is undefined along this path and
/// the caller must fall back to the finite oracle (CLI exit code 2).
class DegenerateEnvelopeError : public std::runtime_error {
  public:
    explicit DegenerateEnvelopeError(const std::string& what) : std::runtime_error(what) {}
};

/// A numeric consistency check failed: unstable root classification, census
/// invariant violation, integrality assertion (CLI exit code 3).
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace uniratio
