// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared by every module.
 *
 * Each type maps to one failure category so the command-line front end can
 * translate any of them into exit code 1 without inspecting messages.
 */

#include <stdexcept>
#include <string>

namespace orlicz {

/// An argument lies outside the mathematical domain (for example t <= 0).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A documented precondition was violated (non-monotone input, bad indices).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A structural invariant failed (for example a decreasing density).
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A numerical procedure did not reach its target accuracy.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace orlicz
