#pragma once

#include <stdexcept>
#include <string>

namespace hopfhc {

/// A normal-form word left the degree cap of a truncated preset.
struct DegreeOverflow : std::runtime_error {
    explicit DegreeOverflow(const std::string& what) : std::runtime_error(what) {}
};

/// An operation needing the antipode was called on a preset without one.
struct NotHopf : std::runtime_error {
    explicit NotHopf(const std::string& what) : std::runtime_error(what) {}
};

/// A coefficient module failed the stability check an operation requires.
struct NotStable : std::runtime_error {
    explicit NotStable(const std::string& what) : std::runtime_error(what) {}
};

/// A coefficient module failed the anti-Yetter-Drinfeld check.
struct NotAYD : std::runtime_error {
    explicit NotAYD(const std::string& what) : std::runtime_error(what) {}
};

/// Candidate ideal generators do not span a coideal.
struct NotCoideal : std::runtime_error {
    explicit NotCoideal(const std::string& what) : std::runtime_error(what) {}
};

/// The quotient-lemma hypothesis p(J-slab) = 0 failed; carries a witness.
struct HypothesisFailed : std::runtime_error {
    explicit HypothesisFailed(const std::string& what) : std::runtime_error(what) {}
};

/// A coboundary squared to something nonzero.
struct NotAComplex : std::runtime_error {
    explicit NotAComplex(const std::string& what) : std::runtime_error(what) {}
};

/// A cyclic operator failed t^(n+1) = id where cocyclicity was required.
struct NotCocyclic : std::runtime_error {
    explicit NotCocyclic(const std::string& what) : std::runtime_error(what) {}
};

/// Configuration file could not be parsed.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what) : std::runtime_error(what), line(line_) {}
};

/// Configuration parsed but failed validation; names the offending key.
struct ValidationError : std::runtime_error {
    std::string key;
    ValidationError(std::string key_, const std::string& what)
        : std::runtime_error(what), key(std::move(key_)) {}
};

} // namespace hopfhc
