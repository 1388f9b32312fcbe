#pragma once

#include <stdexcept>
#include <string>

namespace oim {

// Precondition / dimension-agreement violations (caller bugs).
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

// Bad user input: config files, scenario ranges, malformed problem files.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A SHIL architecture cannot drive the requested node count.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Integration produced a non-finite phase.
class divergence_error : public std::runtime_error {
public:
    explicit divergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Operation called outside the case it is defined for
// (e.g. Lyapunov energy of a non-autonomous system).
class unsupported_error : public std::logic_error {
public:
    explicit unsupported_error(const std::string& what) : std::logic_error(what) {}
};

// CLI exit codes.
enum ExitCode {
    kExitOk = 0,
    kExitValidation = 2,
    kExitCapacity = 3,
    kExitDivergence = 4,
};

} // namespace oim
