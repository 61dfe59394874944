// Copyright 2026 The wheelembed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>

namespace wheelembed {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;            // success, including "bound not sharp" findings
inline constexpr int kExitInputError = 1;    // malformed input or parameters out of domain
inline constexpr int kExitInconclusive = 2;  // a search ran out of its node budget

/// Runs the wheelembed command line. Subcommands: gen, embed, metrics, bound,
/// verify, ham, oracle, export. The default OpenMP job count comes from the
/// WHEELEMBED_JOBS environment variable when set.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wheelembed
