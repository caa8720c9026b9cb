#pragma once

#include <stdexcept>
#include <string>

namespace nker {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Group construction
struct ClosureTooLarge : Error {
    explicit ClosureTooLarge(const std::string& w) : Error(w) {}
};
struct NotOrderTwo : Error {
    explicit NotOrderTwo(const std::string& w) : Error(w) {}
};
struct AbelianResult : Error {
    explicit AbelianResult(const std::string& w) : Error(w) {}
};
struct InvalidParams : Error {
    explicit InvalidParams(const std::string& w) : Error(w) {}
};
struct NotASubgroup : Error {
    explicit NotASubgroup(const std::string& w) : Error(w) {}
};
struct NotNormal : Error {
    explicit NotNormal(const std::string& w) : Error(w) {}
};

// Cyclotomics
struct NotCoprime : Error {
    explicit NotCoprime(const std::string& w) : Error(w) {}
};
struct NotRational : Error {
    explicit NotRational(const std::string& w) : Error(w) {}
};

// Character table engine
struct PrimeSearchFailed : Error {
    explicit PrimeSearchFailed(const std::string& w) : Error(w) {}
};
struct LiftInconsistent : Error {
    explicit LiftInconsistent(const std::string& w) : Error(w) {}
};
struct NotAnIndicator : Error {
    explicit NotAnIndicator(const std::string& w) : Error(w) {}
};

// Schur machinery
struct EvenConductor : Error {
    explicit EvenConductor(const std::string& w) : Error(w) {}
};
struct NonIntegralIndex : Error {
    explicit NonIntegralIndex(const std::string& w) : Error(w) {}
};

// Cross-checking
struct MismatchDetected : Error {
    explicit MismatchDetected(const std::string& w) : Error(w) {}
};

// DSL
struct SyntaxError : Error {
    int line, col;
    SyntaxError(int line_, int col_, const std::string& expected)
        : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                ": expected " + expected),
          line(line_), col(col_) {}
};
struct OrderBound : Error {
    explicit OrderBound(const std::string& w) : Error(w) {}
};

} // namespace nker
