#pragma once

#include <stdexcept>
#include <string>

namespace lmsa {

// Invalid or contradictory configuration (bad key, unparsable value, missing
// required field). The CLI maps this to exit code 2.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// File-system failure with path context. CLI exit code 3.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (quadrature did not converge within its iteration budget,
// or a density underflowed to zero mass). Carries the best partial estimate so
// callers can report how far the computation got. CLI exit code 4.
class numeric_error : public std::runtime_error {
public:
    numeric_error(const std::string& what, double partial)
        : std::runtime_error(what), partial_estimate(partial) {}
    double partial_estimate;
};

// Operation requires optional data the object does not carry
// (e.g. a growth check on a potential without a certificate).
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lmsa
