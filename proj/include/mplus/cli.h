// Copyright 2026 The mplus Authors
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

#ifndef MPLUS_CLI_H_
#define MPLUS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace mplus {

// Entry point shared by the mplus binary and the tests. args excludes the
// program name. Every subcommand writes one JSON document to out and
// returns 0 only when all of its checks passed.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace mplus

#endif  // MPLUS_CLI_H_
