/*
 * errors.hpp — exception taxonomy shared by all sjslab modules.
 *
 * invalid_parameter : bad construction/configuration input (CLI exit 2)
 * domain_error      : evaluation outside the slab (-tau,tau) or a function's
 *                     support contract (CLI exit 2)
 * accuracy_error    : adaptive quadrature failed to stabilise within its node
 *                     budget; carries the last two estimates (CLI exit 3)
 */

#pragma once

#include <stdexcept>
#include <string>

namespace sjslab {

struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct accuracy_error : std::runtime_error {
    double last_estimate;
    double previous_estimate;

    accuracy_error(const std::string& what, double last, double previous)
        : std::runtime_error(what + " (last estimate " + std::to_string(last) +
                             ", previous " + std::to_string(previous) + ")"),
          last_estimate(last),
          previous_estimate(previous) {}
};

} // namespace sjslab
