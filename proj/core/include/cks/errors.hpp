#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cks {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class GridError : public Error {
public:
    using Error::Error;
};

class PotentialError : public Error {
public:
    using Error::Error;
};

class ScfError : public Error {
public:
    ScfError(const std::string& msg, std::vector<double> residuals = {})
        : Error(msg), residual_history(std::move(residuals)) {}
    std::vector<double> residual_history;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace cks
