#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace apinn {

/// Point/network dimension disagreement.
class InputShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition (non-empty set, valid range, ...) was violated.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A non-finite value appeared; carries the space-time point where it did.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, std::vector<double> point = {})
        : std::runtime_error(what + format_point(point)), point_(std::move(point)) {}

    const std::vector<double>& point() const noexcept { return point_; }

private:
    static std::string format_point(const std::vector<double>& p) {
        if (p.empty()) return {};
        std::string s = " at (";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(p[i]);
        }
        return s + ")";
    }

    std::vector<double> point_;
};

class CatalogError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ResolutionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Reference solver blew up; the message advises a smaller time step.
class InstabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Metric normalisation by a zero-norm truth vector.
class NormalizationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid experiment configuration; the message starts with file:line:column when known.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace apinn
