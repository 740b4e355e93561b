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

#ifndef rssmap_cli_H
#define rssmap_cli_H

#include <iosfwd>
#include <string>
#include <vector>

namespace rssmap
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_usage = 1,
        exit_data = 2,
        exit_numerical = 3
    };

    // Subcommands: simulate, attenuate, correlate, calibrate, synth,
    // freq-average, example-scene. Results go to `out`, diagnostics to `err`.
    int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
    int run_cli(int argc, char **argv);
}

#endif
