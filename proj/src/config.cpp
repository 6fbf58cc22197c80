// SPDX-License-Identifier: Apache-2.0
//
// irsq - performance-loss analysis for IRS-aided links with discrete phase shifters
// Copyright (C) 2026 the irsq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irsq/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace irsq {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return {};
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

double parse_real(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double parsed = 0.0;
    try {
        parsed = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: key '" + key + "' has non-numeric value '" + value + "'");
    }
    if (pos != value.size())
        throw std::invalid_argument("config: key '" + key + "' has trailing garbage in '" + value + "'");
    return parsed;
}

int parse_int(const std::string& key, const std::string& value) {
    const double real = parse_real(key, value);
    const int result = static_cast<int>(real);
    if (static_cast<double>(result) != real)
        throw std::invalid_argument("config: key '" + key + "' must be an integer, got '" + value + "'");
    return result;
}

void check_angle(std::vector<std::string>& violations, const char* name, double value) {
    if (!(value >= 0.0 && value <= kPi))
        violations.push_back(std::string(name) + " must lie in [0, pi]");
}

} // namespace

std::string to_string(ChannelKind kind) {
    return kind == ChannelKind::los ? "los" : "rayleigh";
}

ChannelKind channel_kind_from_string(const std::string& name) {
    const std::string n = lower(name);
    if (n == "los")
        return ChannelKind::los;
    if (n == "rayleigh")
        return ChannelKind::rayleigh;
    throw std::invalid_argument("unknown channel kind '" + name + "' (expected los or rayleigh)");
}

void SystemConfig::validate() const {
    std::vector<std::string> violations;
    if (M < 1)
        violations.push_back("M must be >= 1");
    if (k.has_value() && *k < 1)
        violations.push_back("k must be >= 1 when finite");
    if (!(element_spacing_over_wavelength > 0.0))
        violations.push_back("element_spacing_over_wavelength must be > 0");
    check_angle(violations, "theta_ai", theta_ai);
    check_angle(violations, "theta_ib", theta_ib);
    check_angle(violations, "theta_ab", theta_ab);
    if (!(d_ab > 0.0))
        violations.push_back("d_ab must be > 0");
    if (!(d_ai > 0.0))
        violations.push_back("d_ai must be > 0");
    if (!(pl_ref_distance > 0.0))
        violations.push_back("pl_ref_distance must be > 0");
    if (!std::isfinite(pl_ref_db))
        violations.push_back("pl_ref_db must be finite");
    for (const auto* gamma : {&gamma_ai, &gamma_ib, &gamma_ab}) {
        if (gamma->has_value() && !(**gamma > 0.0)) {
            violations.push_back("path-loss exponents must be > 0");
            break;
        }
    }
    if (!(alpha_ai > 0.0) || !(alpha_ib > 0.0) || !(alpha_ab > 0.0))
        violations.push_back("alpha parameters must be > 0");
    if (!violations.empty()) {
        std::string message = "invalid configuration:";
        for (const auto& violation : violations)
            message += " " + violation + ";";
        throw std::invalid_argument(message);
    }
}

SystemConfig parse_config(const std::string& text) {
    SystemConfig config;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#')
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key=value, got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": empty key or value");

        if (key == "M") {
            config.M = parse_int(key, value);
        } else if (key == "k") {
            if (lower(value) == "infinite" || lower(value) == "inf")
                config.k.reset();
            else
                config.k = parse_int(key, value);
        } else if (key == "element_spacing_over_wavelength") {
            config.element_spacing_over_wavelength = parse_real(key, value);
        } else if (key == "theta_ai") {
            config.theta_ai = parse_real(key, value);
        } else if (key == "theta_ib") {
            config.theta_ib = parse_real(key, value);
        } else if (key == "theta_ab") {
            config.theta_ab = parse_real(key, value);
        } else if (key == "d_ab") {
            config.d_ab = parse_real(key, value);
        } else if (key == "d_ai") {
            config.d_ai = parse_real(key, value);
        } else if (key == "transmit_power") {
            config.transmit_power = parse_real(key, value);
        } else if (key == "noise_power") {
            config.noise_power = parse_real(key, value);
        } else if (key == "pl_ref_db") {
            config.pl_ref_db = parse_real(key, value);
        } else if (key == "pl_ref_distance") {
            config.pl_ref_distance = parse_real(key, value);
        } else if (key == "gamma_ai") {
            config.gamma_ai = parse_real(key, value);
        } else if (key == "gamma_ib") {
            config.gamma_ib = parse_real(key, value);
        } else if (key == "gamma_ab") {
            config.gamma_ab = parse_real(key, value);
        } else if (key == "alpha_ai") {
            config.alpha_ai = parse_real(key, value);
        } else if (key == "alpha_ib") {
            config.alpha_ib = parse_real(key, value);
        } else if (key == "alpha_ab") {
            config.alpha_ab = parse_real(key, value);
        } else {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": unknown key '" + key + "'");
        }
    }
    config.validate();
    return config;
}

SystemConfig load_config(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw std::invalid_argument("cannot open config file '" + path + "'");
    std::ostringstream contents;
    contents << file.rdbuf();
    return parse_config(contents.str());
}

} // namespace irsq
