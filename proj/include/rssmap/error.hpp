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

#ifndef rssmap_error_H
#define rssmap_error_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rssmap
{
    // Invalid input data: scene invariants, grid mismatches, malformed files.
    class ValidationError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Parse error in a text file. line() is 1-based, 0 when not tied to a line.
    class FormatError : public ValidationError
    {
    public:
        FormatError(const std::string &message, std::size_t line)
            : ValidationError(line ? message + " at line " + std::to_string(line) : message), line_(line) {}

        std::size_t line() const noexcept { return line_; }

    private:
        std::size_t line_;
    };

    // Well-formed input on which the requested quantity is undefined
    // (zero separation, constant map, zero maximum).
    class NumericalError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };
}

#endif
