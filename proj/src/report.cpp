// Copyright 2026 orlicz-kit contributors. SPDX-License-Identifier: MIT
#include "orlicz/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace orlicz::report {
namespace {

std::string fmt(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    // keep integers visibly floating so readers do not retype them
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

void write(const nlohmann::json& j, std::ostringstream& os, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ",\n";
                first = false;
                os << pad << nlohmann::json(it.key()).dump() << ": ";
                write(it.value(), os, depth + 1);
            }
            os << "\n" << close << "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            os << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ",\n";
                os << pad;
                write(j[i], os, depth + 1);
            }
            os << "\n" << close << "]";
            return;
        }
        case nlohmann::json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                os << "null";
                return;
            }
            os << fmt(v);
            return;
        }
        default:
            os << j.dump();
    }
}

}  // namespace

nlohmann::json number(double v, double rate) {
    if (std::isnan(v)) return nullptr;
    if (std::isinf(v)) {
        nlohmann::json d = {{"divergent", true}};
        if (v < 0) d["sign"] = -1;
        d["rate"] = std::isfinite(rate) ? nlohmann::json(rate) : nlohmann::json(nullptr);
        return d;
    }
    return v;
}

std::string dump(const nlohmann::json& j) {
    std::ostringstream os;
    write(j, os, 0);
    os << "\n";
    return os.str();
}

std::string csv(const std::vector<std::pair<double, double>>& rows, const std::string& a, const std::string& b) {
    std::string out = a + "," + b + "\n";
    for (const auto& [x, y] : rows) {
        out += fmt(x);
        out += ",";
        out += std::isfinite(y) ? fmt(y) : (y > 0 ? "inf" : (y < 0 ? "-inf" : "nan"));
        out += "\n";
    }
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace orlicz::report
