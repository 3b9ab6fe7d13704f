/*
 * errors.hpp
 * ----------
 * Exception hierarchy for the whole engine.  Every failure mode that a
 * caller can meaningfully react to gets its own type; all of them derive
 * from qct::Error so tools can catch one base class at the top level.
 *
 * A deliberate exception: a *mathematical counterexample* found by a
 * verification routine (a theorem check that fails on sound input) is not
 * thrown -- it is reported as a verdict so the caller can print a full
 * report.  Exceptions are reserved for unusable input, unsatisfiable
 * requests, and internal contract violations.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qct {

/// Base class of all exceptions thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input data: dimension mismatches, non-primitive rays,
/// inconsistent tables, unparsable fixture text.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A ring presentation did not determine unique normal forms in some
/// graded degree (basis not complementary to the relation span).
class PresentationError : public Error {
public:
    using Error::Error;
};

/// A truncated power series admits no rational closed form over the
/// declared denominator ansatz within the degree cap.
class NoClosedForm : public Error {
public:
    using Error::Error;
};

/// A fit or comparison had too few known series orders to certify the
/// answer with the required safety margin.
class InsufficientOrders : public Error {
public:
    using Error::Error;
};

/// A computation needed series coefficients beyond the configured
/// truncation bounds.
class InsufficientTruncation : public Error {
public:
    using Error::Error;
};

/// A residue was requested at a pole of order two or more.
class HigherOrderPole : public Error {
public:
    using Error::Error;
};

/// A single-variable residue was requested where another denominator
/// factor also vanishes identically on the evaluation locus.
class NonIsolatedPole : public Error {
public:
    using Error::Error;
};

/// A substitution hit a denominator factor that vanishes identically.
class EvaluationPole : public Error {
public:
    using Error::Error;
};

/// A subspace expected to be closed under an operation is not; the
/// message carries a witness.
class NotClosed : public Error {
public:
    using Error::Error;
};

/// An induced pairing on a quotient is degenerate or ill-defined.
class DegeneratePairing : public Error {
public:
    using Error::Error;
};

/// A fan fails a precondition of the requested computation
/// (e.g. smoothness or pseudo-completeness).
class UnsupportedFan : public Error {
public:
    using Error::Error;
};

/// A search/construction routine exhausted its options without
/// producing a valid object.
class ConstructionFailure : public Error {
public:
    using Error::Error;
};

} // namespace qct
