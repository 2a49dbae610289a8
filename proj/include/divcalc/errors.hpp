#pragma once

#include <stdexcept>
#include <string>

namespace divcalc {

/// Base class for all structured errors raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Vector/form rank disagreement.
class DimensionMismatch : public Error {
  public:
    DimensionMismatch(std::size_t expected, std::size_t got)
        : Error("dimension mismatch: expected rank " + std::to_string(expected) +
                ", got " + std::to_string(got)),
          expected(expected), got(got) {}
    std::size_t expected, got;
};

/// Intersection form fails the (1, rank-1) signature requirement.
class SignatureViolation : public Error {
  public:
    explicit SignatureViolation(const std::string& what) : Error("signature violation: " + what) {}
};

/// A Gram matrix that must be negative definite is not; carries the index of
/// the first offending leading principal minor (1-based) and its determinant.
class GramNotNegativeDefinite : public Error {
  public:
    GramNotNegativeDefinite(std::size_t minor_index, const std::string& minor_det)
        : Error("Gram matrix not negative definite: leading principal minor " +
                std::to_string(minor_index) + " has determinant " + minor_det),
          minor_index(minor_index), minor_det(minor_det) {}
    std::size_t minor_index;
    std::string minor_det;
};

/// Schema or invariant violation while building a surface model; `path` is
/// the JSON field path (or constructor argument) that failed.
class ValidationError : public Error {
  public:
    ValidationError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path(path) {}
    std::string path;
};

/// A theorem's stated numerical hypothesis does not hold for the input.
class HypothesisViolation : public Error {
  public:
    explicit HypothesisViolation(const std::string& what) : Error("hypothesis violation: " + what) {}
};

}  // namespace divcalc
