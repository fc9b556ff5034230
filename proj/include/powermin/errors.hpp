#pragma once

#include <stdexcept>
#include <string>

namespace powermin {

/// Two particles share a position under a kernel with W(0) = +inf.
/// Carries "energy is +infinity" semantics; optimizers treat it as a rejected step.
class CoincidentPoints : public std::domain_error {
public:
    CoincidentPoints(std::size_t i, std::size_t j)
        : std::domain_error("coincident points " + std::to_string(i) + " and " +
                            std::to_string(j) + " under a singular kernel (energy is +inf)"),
          first(i), second(j) {}

    std::size_t first;
    std::size_t second;
};

class WrongPotentialClass : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BracketFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace powermin
