#pragma once

#include <stdexcept>
#include <string>

namespace holecolor {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Precondition and argument failures.
class DomainError : public Error { public: using Error::Error; };

// Malformed instance or coloring documents.
class ParseError : public Error { public: using Error::Error; };

// A structurally valid m-clique hole was required.
class InvalidHole : public Error { public: using Error::Error; };

// Invalid input to a colorability decision.
class InvalidInstance : public Error { public: using Error::Error; };

// A cardinality move whose result would break ring invariants.
class InvalidMove : public Error { public: using Error::Error; };

// Balancing requires the extreme sector sum.
class NotExtreme : public Error { public: using Error::Error; };

class NotOdd : public Error { public: using Error::Error; };
class NotEven : public Error { public: using Error::Error; };

// The instance fails the colorability condition.
class NotColorable : public Error { public: using Error::Error; };

// Selection counts do not reproduce the target profile.
class CoverageMismatch : public Error { public: using Error::Error; };

// Greedy padding cannot reach the extreme sum.
class PaddingStuck : public Error { public: using Error::Error; };

// Input exceeds the exact-search size guard.
class TooLarge : public Error { public: using Error::Error; };

// A generator spec cannot be satisfied.
class InfeasibleSpec : public Error { public: using Error::Error; };

// The candidate set is not a maximum independent set of the ring.
class NotMaximumIndependent : public Error { public: using Error::Error; };

// A maximum independent set matched no unique family. Raising this would
// falsify the family-disjointness argument, so it doubles as a tripwire.
class ClassificationAmbiguous : public Error { public: using Error::Error; };

// An invariant that is supposed to be proven failed at runtime. Treated as
// a reportable finding, not a recoverable condition.
class InternalInvariant : public Error { public: using Error::Error; };

// Both the constructive path and its exact-search fallback are
// unavailable; the message carries the full diagnostics.
class Unresolved : public Error { public: using Error::Error; };

}  // namespace holecolor
