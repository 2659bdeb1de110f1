#pragma once
// Error taxonomy shared by every module.  The CLI maps the three base
// classes onto exit codes: DomainError -> 1, InfeasibleError -> 2,
// InternalError -> 3.

#include <stdexcept>
#include <string>

namespace adjoint {

// Input lies outside an operation's documented domain.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// The requested object provably does not exist; the inputs themselves are
// well formed.
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// A "cannot happen" condition; indicates a defect in this library, not in
// the caller's input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Checked 64-bit arithmetic overflowed.
struct OverflowError : DomainError {
  explicit OverflowError(const std::string& what) : DomainError(what) {}
};

// (gamma, beta) sign combination that is not an adjoint state.
struct InvalidState : DomainError {
  explicit InvalidState(const std::string& what) : DomainError(what) {}
};

// A formula requiring an even sum/difference was fed odd input.
struct OddSum : DomainError {
  explicit OddSum(const std::string& what) : DomainError(what) {}
};

// Discriminant of a level-bound formula is negative: no valid chain can
// have the given start data.
struct NegativeDiscriminant : DomainError {
  explicit NegativeDiscriminant(const std::string& what) : DomainError(what) {}
};

// Exhaustive search found no rule-valid chain for the given start data.
struct NoValidChain : InfeasibleError {
  explicit NoValidChain(const std::string& what) : InfeasibleError(what) {}
};

// A contraction vector's length disagrees with the requested level.
struct LengthMismatch : DomainError {
  explicit LengthMismatch(const std::string& what) : DomainError(what) {}
};

// Rolling a chain forward from computed start data failed to reproduce the
// requested end tuple.  Mathematically impossible for consistent inputs;
// seeing this means the library itself is broken.
struct EndMismatch : InternalError {
  explicit EndMismatch(const std::string& what) : InternalError(what) {}
};

// An end tuple matches none of the minimal-pair profiles.
struct Unclassifiable : DomainError {
  explicit Unclassifiable(const std::string& what) : DomainError(what) {}
};

}  // namespace adjoint
