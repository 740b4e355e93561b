// SPDX-License-Identifier: Apache-2.0
//
// rssmap - indoor RSS map simulation and reflection-coefficient calibration
// Copyright (C) 2026 The rssmap authors
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

#include "rssmap/error.hpp"
#include "rssmap/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <set>

namespace rssmap
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }
    }

    std::vector<KeyValue> parse_key_values(std::istream &in)
    {
        std::vector<KeyValue> out;
        std::set<std::string, std::less<>> seen;
        std::string raw;
        std::size_t line = 0;
        while (std::getline(in, raw))
        {
            ++line;
            std::string_view s = raw;
            if (const auto hash = s.find('#'); hash != std::string_view::npos)
                s = s.substr(0, hash);
            s = trim(s);
            if (s.empty())
                continue;
            const auto eq = s.find('=');
            if (eq == std::string_view::npos)
                throw FormatError("expected 'key = value'", line);
            const std::string_view key = trim(s.substr(0, eq));
            const std::string_view value = trim(s.substr(eq + 1));
            if (key.empty())
                throw FormatError("empty key", line);
            if (!seen.emplace(key).second)
                throw FormatError("duplicate key '" + std::string(key) + "'", line);
            out.push_back({std::string(key), std::string(value), line});
        }
        return out;
    }

    double parse_real(std::string_view text, std::size_t line)
    {
        text = trim(text);
        if (!text.empty() && text.front() == '+')
            text.remove_prefix(1);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
            throw FormatError("invalid number '" + std::string(text) + "'", line);
        if (!std::isfinite(v))
            throw FormatError("non-finite value '" + std::string(text) + "'", line);
        return v;
    }

    long long parse_integer(std::string_view text, std::size_t line)
    {
        text = trim(text);
        if (!text.empty() && text.front() == '+')
            text.remove_prefix(1);
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
            throw FormatError("invalid integer '" + std::string(text) + "'", line);
        return v;
    }

    Vec3d parse_point(std::string_view text, std::size_t line)
    {
        Vec3d p;
        for (int i = 0; i < 3; ++i)
        {
            const auto comma = text.find(',');
            if ((i < 2) != (comma != std::string_view::npos))
                throw FormatError("expected three comma-separated values", line);
            p(i) = parse_real(text.substr(0, comma), line);
            if (i < 2)
                text.remove_prefix(comma + 1);
        }
        return p;
    }

    cdouble parse_polar(std::string_view text, std::size_t line)
    {
        const auto at = text.find('@');
        if (at == std::string_view::npos)
            throw FormatError("expected complex value as 'magnitude@degrees'", line);
        const double mag = parse_real(text.substr(0, at), line);
        const double deg = parse_real(text.substr(at + 1), line);
        if (mag < 0.0)
            throw FormatError("complex magnitude must be nonnegative", line);
        return std::polar(mag, deg_to_rad(deg));
    }

    std::string format_real(double v)
    {
        char buf[32];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        (void)ec;
        return std::string(buf, ptr);
    }

    std::string format_point(const Vec3d &p)
    {
        return format_real(p.x()) + ", " + format_real(p.y()) + ", " + format_real(p.z());
    }

    std::string format_polar(cdouble z)
    {
        const double mag = std::abs(z);
        const double deg = mag > 0.0 ? wrap_degrees(rad_to_deg(std::arg(z))) : 0.0;
        return format_real(mag) + "@" + format_real(deg);
    }
}
