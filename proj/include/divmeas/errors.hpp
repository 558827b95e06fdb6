#ifndef DIVMEAS_ERRORS_HPP
#define DIVMEAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace divmeas {

// Bad input values (weights that do not sum to one, negative scales, ...).
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Mathematically invalid evaluation point (e.g. non-positive future delta
// on a map declared increasing).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// Quadrature or iteration failure with diagnostics in the message.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Moment targets no distribution can satisfy.
class infeasible_error : public std::invalid_argument {
public:
    explicit infeasible_error(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace divmeas

#endif
