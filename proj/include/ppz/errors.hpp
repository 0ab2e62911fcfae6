// errors.hpp
// Exception hierarchy shared by every ppz module.
//
// All library failures derive from ppz::Error. The CLI maps the categories
// onto process exit codes (usage=2, capacity=3).

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppz {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Request exceeds a table, a guard, or a resource limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Argument within the near-pole threshold of a pole of a meromorphic function.
class NearPoleError : public DomainError {
public:
    NearPoleError(const std::string& what, std::complex<double> pole)
        : DomainError(what), pole_(pole) {}
    std::complex<double> pole() const { return pole_; }

private:
    std::complex<double> pole_;
};

// Evaluation point too close to a zeta zero 1/2 + i*gamma.
class ZeroProximityError : public DomainError {
public:
    ZeroProximityError(const std::string& what, double gamma)
        : DomainError(what), gamma_(gamma) {}
    double nearest_gamma() const { return gamma_; }

private:
    double gamma_;
};

// Argument too close to the branch cut of a logarithm.
class BranchError : public DomainError {
public:
    using DomainError::DomainError;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::int64_t line)
        : Error(what), line_(line) {}
    std::int64_t line() const { return line_; }

private:
    std::int64_t line_;
};

// Inconsistent or missing run configuration (CLI level).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace ppz
