#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace arcgeom {

// Exception taxonomy shared by the library and the CLI exit-code contract:
//   VerificationError -> exit 1, InputError -> exit 2,
//   HypothesisViolation (and subclasses) -> exit 3, GuardExceeded -> exit 4.

/// Malformed caller input: bad parameters, unreadable files, invalid codes.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal re-check failed: a result that should hold by construction
/// did not survive direct verification.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A named hypothesis of the unique-extension procedure is not met.
class HypothesisViolation : public std::runtime_error {
 public:
  explicit HypothesisViolation(std::string hypothesis, const std::string& detail = "")
      : std::runtime_error(detail.empty()
                               ? "hypothesis violated: " + hypothesis
                               : "hypothesis violated: " + hypothesis + " (" + detail + ")"),
        hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// A quotient image that ought to be a valid arc is not; the input
/// contradicts the hypotheses it claimed to satisfy.
class QuotientNotArc : public HypothesisViolation {
 public:
  explicit QuotientNotArc(const std::string& detail)
      : HypothesisViolation("quotient is an arc", detail) {}
};

/// The two lifted tangent lines do not meet; ditto.
class LinesSkew : public HypothesisViolation {
 public:
  explicit LinesSkew(const std::string& detail)
      : HypothesisViolation("tangent lines meet", detail) {}
};

/// A size guard protecting memory or runtime was exceeded.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace arcgeom
