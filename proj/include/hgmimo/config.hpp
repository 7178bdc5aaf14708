// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#ifndef HGMIMO_CONFIG_HPP
#define HGMIMO_CONFIG_HPP

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hgmimo {

// Malformed or unknown configuration input.
struct ConfigError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Flat dotted-key configuration; std::map keeps serialization order stable.
using ConfigMap = std::map<std::string, std::string>;

namespace detail {

inline std::string trim(const std::string &s)
{
    const std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return {};
    const std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace detail

// Parses "key = value" lines; blank lines and lines starting with '#' are
// ignored. Duplicate keys are rejected.
inline ConfigMap parse_config_text(const std::string &text)
{
    ConfigMap map;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        const std::string stripped = detail::trim(line);
        if (stripped.empty() || stripped[0] == '#')
            continue;

        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");

        const std::string key = detail::trim(stripped.substr(0, eq));
        const std::string value = detail::trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        if (!map.emplace(key, value).second)
            throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    return map;
}

inline ConfigMap parse_config_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

// Canonical text form: sorted "key = value" lines.
inline std::string format_config(const ConfigMap &map)
{
    std::string out;
    for (const auto &[key, value] : map)
        out += key + " = " + value + "\n";
    return out;
}

// Doubles travel through text losslessly at 17 significant digits.
inline std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline double parse_double(const std::string &key, const std::string &value)
{
    std::size_t used = 0;
    double v = 0.0;
    try
    {
        v = std::stod(value, &used);
    }
    catch (const std::exception &)
    {
        throw ConfigError("key '" + key + "': '" + value + "' is not a number");
    }
    if (used != value.size())
        throw ConfigError("key '" + key + "': trailing characters in '" + value + "'");
    return v;
}

inline int parse_int(const std::string &key, const std::string &value)
{
    std::size_t used = 0;
    int v = 0;
    try
    {
        v = std::stoi(value, &used);
    }
    catch (const std::exception &)
    {
        throw ConfigError("key '" + key + "': '" + value + "' is not an integer");
    }
    if (used != value.size())
        throw ConfigError("key '" + key + "': trailing characters in '" + value + "'");
    return v;
}

} // namespace hgmimo

#endif // HGMIMO_CONFIG_HPP
