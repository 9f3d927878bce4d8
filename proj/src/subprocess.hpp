// Copyright 2026 The isodub Authors
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

#ifndef ISODUB_SRC_SUBPROCESS_HPP_
#define ISODUB_SRC_SUBPROCESS_HPP_

#include <string>
#include <string_view>

namespace isodub::subprocess {

struct ProcessResult {
  int exit_code = -1;     // child exit status, or -1 if killed by a signal
  int term_signal = 0;    // terminating signal if any
  std::string out;        // everything the child wrote to stdout
};

// Runs `/bin/sh -c command`, feeding `input` to the child's stdin and
// capturing its stdout.  Reads and writes are interleaved with poll(2) so
// large payloads in both directions cannot deadlock.  SIGPIPE is ignored
// process-wide on first use so a child that closes stdin early surfaces as
// EPIPE instead of killing us.  Throws isodub::Error on fork/pipe failure.
ProcessResult run_command(const std::string& command, std::string_view input);

}  // namespace isodub::subprocess

#endif  // ISODUB_SRC_SUBPROCESS_HPP_
