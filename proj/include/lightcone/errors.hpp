#pragma once

#include <stdexcept>
#include <string>

namespace lightcone {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Velocity within the guard band of |V| = 1; no valid transform exists.
class NearLightSpeed : public Error {
public:
    using Error::Error;
};

/// Event pair with |dt| below the null threshold; ordering is undefined.
class DegenerateOrder : public Error {
public:
    using Error::Error;
};

/// State queried exactly at a flip time.
class AtFlipBoundary : public Error {
public:
    using Error::Error;
};

/// Scenario violates a structural invariant.
class InvalidScenario : public Error {
public:
    using Error::Error;
};

/// A photon would be absorbed at its own emission event.
class SelfAbsorption : public Error {
public:
    using Error::Error;
};

/// Actor id does not name a two-level atom in the event graph.
class UnknownActor : public Error {
public:
    using Error::Error;
};

/// Event id is not a flip on the given worldline.
class NotAFlip : public Error {
public:
    using Error::Error;
};

/// Slice time coincides with an event's frame time.
class SliceOnEvent : public Error {
public:
    using Error::Error;
};

/// Scenario text that does not match the grammar.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Scenario text that parses but violates a semantic rule.
class SemanticError : public Error {
public:
    using Error::Error;
};

} // namespace lightcone
