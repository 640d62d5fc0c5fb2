#pragma once

#include <stdexcept>
#include <string>

namespace khoskein {

// Input-side failures: malformed or inconsistent user data. CLI exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency violations. These never represent valid states; if one
// fires, a convention or algorithm is wrong. CLI exit code 3.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct MalformedToken : InputError {
  explicit MalformedToken(const std::string& w) : InputError("MalformedToken: " + w) {}
};
struct InconsistentWiring : InputError {
  explicit InconsistentWiring(const std::string& w) : InputError("InconsistentWiring: " + w) {}
};
struct OrientationConflict : InputError {
  explicit OrientationConflict(const std::string& w) : InputError("OrientationConflict: " + w) {}
};
struct LengthMismatch : InputError {
  explicit LengthMismatch(const std::string& w) : InputError("LengthMismatch: " + w) {}
};
struct IndexOutOfRange : InputError {
  explicit IndexOutOfRange(const std::string& w) : InputError("IndexOutOfRange: " + w) {}
};
struct CubeTooLarge : InputError {
  explicit CubeTooLarge(const std::string& w) : InputError("CubeTooLarge: " + w) {}
};
struct NonGenericDiagram : InputError {
  explicit NonGenericDiagram(const std::string& w) : InputError("NonGenericDiagram: " + w) {}
};
struct HasMixedCrossings : InputError {
  explicit HasMixedCrossings(const std::string& w) : InputError("HasMixedCrossings: " + w) {}
};
struct NotAMixedCrossing : InputError {
  explicit NotAMixedCrossing(const std::string& w) : InputError("NotAMixedCrossing: " + w) {}
};
struct EmptyGamma : InputError {
  explicit EmptyGamma(const std::string& w) : InputError("EmptyGamma: " + w) {}
};
struct EmptyCmix : InputError {
  explicit EmptyCmix(const std::string& w) : InputError("EmptyCmix: " + w) {}
};
struct NotDivisible : InputError {
  explicit NotDivisible(const std::string& w) : InputError("NotDivisible: " + w) {}
};

struct NotAComplex : InternalError {
  explicit NotAComplex(const std::string& w) : InternalError("NotAComplex: " + w) {}
};
struct NotChainMap : InternalError {
  explicit NotChainMap(const std::string& w) : InternalError("NotChainMap: " + w) {}
};
struct CoordinateFailure : InternalError {
  explicit CoordinateFailure(const std::string& w) : InternalError("CoordinateFailure: " + w) {}
};
struct ShiftMismatch : InternalError {
  explicit ShiftMismatch(const std::string& w) : InternalError("ShiftMismatch: " + w) {}
};
struct PageInconsistency : InternalError {
  explicit PageInconsistency(const std::string& w) : InternalError("PageInconsistency: " + w) {}
};
struct SkeinViolation : InternalError {
  explicit SkeinViolation(const std::string& w) : InternalError("SkeinViolation: " + w) {}
};

}  // namespace khoskein
