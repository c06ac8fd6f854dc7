#pragma once

#include <stdexcept>
#include <string>

namespace singular_lab {

// Input does not describe a canonical object (unsorted parts, bad residues, ...).
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside the domain of the requested map.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An internal invariant of a bijection failed. Never expected on valid input.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void check_invariant(bool ok, const std::string &what)
{
    if (!ok) {
        throw invariant_error(what);
    }
}

} // namespace detail

} // namespace singular_lab
