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

#include "subprocess.hpp"

#include <cerrno>
#include <csignal>
#include <cstring>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include "isodub/errors.hpp"

namespace isodub::subprocess {

namespace {

void ignore_sigpipe_once() {
  static const bool done = [] {
    struct sigaction current {};
    if (sigaction(SIGPIPE, nullptr, &current) == 0 &&
        current.sa_handler == SIG_DFL) {
      struct sigaction ign {};
      ign.sa_handler = SIG_IGN;
      sigaction(SIGPIPE, &ign, nullptr);
    }
    return true;
  }();
  (void)done;
}

void set_nonblocking(int fd) {
  int flags = fcntl(fd, F_GETFL, 0);
  if (flags >= 0) fcntl(fd, F_SETFL, flags | O_NONBLOCK);
}

}  // namespace

ProcessResult run_command(const std::string& command, std::string_view input) {
  ignore_sigpipe_once();

  int in_pipe[2];   // parent writes -> child stdin
  int out_pipe[2];  // child stdout -> parent reads
  if (pipe(in_pipe) != 0) throw Error("pipe failed: " + std::string(std::strerror(errno)));
  if (pipe(out_pipe) != 0) {
    close(in_pipe[0]);
    close(in_pipe[1]);
    throw Error("pipe failed: " + std::string(std::strerror(errno)));
  }

  pid_t pid = fork();
  if (pid < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) close(fd);
    throw Error("fork failed: " + std::string(std::strerror(errno)));
  }

  if (pid == 0) {
    // Child: wire the pipes to stdio and hand off to the shell.
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) close(fd);
    signal(SIGPIPE, SIG_DFL);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }

  close(in_pipe[0]);
  close(out_pipe[1]);
  int wfd = in_pipe[1];
  int rfd = out_pipe[0];
  set_nonblocking(wfd);
  set_nonblocking(rfd);

  ProcessResult result;
  std::size_t written = 0;
  bool stdin_open = true;
  if (input.empty()) {
    close(wfd);
    stdin_open = false;
  }

  char buf[65536];
  while (true) {
    struct pollfd fds[2];
    nfds_t nfds = 0;
    int widx = -1, ridx = -1;
    if (stdin_open) {
      widx = static_cast<int>(nfds);
      fds[nfds++] = {wfd, POLLOUT, 0};
    }
    if (rfd >= 0) {
      ridx = static_cast<int>(nfds);
      fds[nfds++] = {rfd, POLLIN, 0};
    }
    if (nfds == 0) break;
    int rc = poll(fds, nfds, -1);
    if (rc < 0) {
      if (errno == EINTR) continue;
      break;
    }

    if (widx >= 0 && (fds[widx].revents & (POLLOUT | POLLERR | POLLHUP))) {
      ssize_t n = write(wfd, input.data() + written, input.size() - written);
      if (n > 0) {
        written += static_cast<std::size_t>(n);
      } else if (n < 0 && errno != EAGAIN && errno != EINTR) {
        // Child closed stdin early (EPIPE); stop feeding it.
        written = input.size();
      }
      if (written >= input.size()) {
        close(wfd);
        stdin_open = false;
      }
    }

    if (ridx >= 0 && (fds[ridx].revents & (POLLIN | POLLERR | POLLHUP))) {
      ssize_t n = read(rfd, buf, sizeof buf);
      if (n > 0) {
        result.out.append(buf, static_cast<std::size_t>(n));
      } else if (n == 0 || (n < 0 && errno != EAGAIN && errno != EINTR)) {
        close(rfd);
        rfd = -1;
      }
    }
  }
  if (stdin_open) close(wfd);
  if (rfd >= 0) close(rfd);

  int status = 0;
  while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    result.exit_code = -1;
    result.term_signal = WTERMSIG(status);
  }
  return result;
}

}  // namespace isodub::subprocess
