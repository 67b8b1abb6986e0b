// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#pragma once

/**
 * @file report.hpp
 * @brief Deterministic JSON and CSV output.
 *
 * Floating values are printed with 17 significant digits. Non-finite values
 * never reach the writer: callers wrap them with number().
 */

#include <string>
#include <utility>
#include <vector>

#include <limits>

#include <json.hpp>

namespace orlicz::report {

inline constexpr const char* kSchema = "orlicz-kit/1";

/// A finite value as a JSON number; +inf as {"divergent": true, "rate": rate}.
/// rate may be NaN, in which case it is written as null.
nlohmann::json number(double v, double rate = std::numeric_limits<double>::quiet_NaN());

/// Serialise with sorted keys, two-space indentation and %.17g numbers.
std::string dump(const nlohmann::json& j);

/// Two-column CSV with a header line.
std::string csv(const std::vector<std::pair<double, double>>& rows, const std::string& a = "t",
                const std::string& b = "F(t)");

/// Writes text to path, throwing std::runtime_error on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace orlicz::report
