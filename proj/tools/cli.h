// Copyright 2026 The tclayers Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TCL_TOOLS_CLI_H
#define TCL_TOOLS_CLI_H

namespace tcl::cli {

enum ExitCode { kOk = 0, kUsage = 1, kNoFamily = 2, kVerification = 3 };

// Entry point of the tclayers tool; returns the process exit code.
int run(int argc, const char* const* argv);

}  // namespace tcl::cli

#endif
