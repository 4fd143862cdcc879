#include "spp/subprocess.hpp"

#include "spp/errors.hpp"

#include <cerrno>
#include <csignal>
#include <cstring>
#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <thread>
#include <unistd.h>

namespace spp {
namespace {

std::string errno_text() { return std::strerror(errno); }

}  // namespace

LineProcess::LineProcess(const std::vector<std::string>& command) {
  if (command.empty()) throw OracleError("external oracle command is empty");
  name_ = command.front();
  std::signal(SIGPIPE, SIG_IGN);

  int in[2], out[2];
  if (pipe2(in, O_CLOEXEC) != 0) throw OracleError("pipe: " + errno_text());
  if (pipe2(out, O_CLOEXEC) != 0) {
    ::close(in[0]);
    ::close(in[1]);
    throw OracleError("pipe: " + errno_text());
  }
  std::vector<char*> argv;
  for (const auto& a : command) argv.push_back(const_cast<char*>(a.c_str()));
  argv.push_back(nullptr);

  pid_ = fork();
  if (pid_ < 0) {
    for (int fd : {in[0], in[1], out[0], out[1]}) ::close(fd);
    throw OracleError("fork: " + errno_text());
  }
  if (pid_ == 0) {
    dup2(in[0], STDIN_FILENO);
    dup2(out[1], STDOUT_FILENO);
    execvp(argv[0], argv.data());
    _exit(127);
  }
  ::close(in[0]);
  ::close(out[1]);
  to_child_ = in[1];
  from_child_ = out[0];
}

LineProcess::~LineProcess() {
  close_input();
  if (from_child_ >= 0) ::close(from_child_);
  if (pid_ <= 0) return;
  for (int i = 0; i < 100; ++i) {
    if (waitpid(pid_, nullptr, WNOHANG) == pid_) return;
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  kill(pid_, SIGKILL);
  waitpid(pid_, nullptr, 0);
}

void LineProcess::close_input() {
  if (to_child_ >= 0) {
    ::close(to_child_);
    to_child_ = -1;
  }
}

std::string LineProcess::exchange(const std::string& line, std::chrono::milliseconds timeout) {
  if (to_child_ < 0) throw OracleError("external oracle '" + name_ + "' is closed");
  std::string payload = line + "\n";
  std::size_t sent = 0;
  while (sent < payload.size()) {
    ssize_t w = ::write(to_child_, payload.data() + sent, payload.size() - sent);
    if (w < 0) {
      if (errno == EINTR) continue;
      throw OracleError("external oracle '" + name_ + "' stopped accepting queries: " + errno_text());
    }
    sent += static_cast<std::size_t>(w);
  }

  const auto deadline = std::chrono::steady_clock::now() + timeout;
  while (true) {
    if (auto nl = pending_.find('\n'); nl != std::string::npos) {
      std::string reply = pending_.substr(0, nl);
      pending_.erase(0, nl + 1);
      if (!reply.empty() && reply.back() == '\r') reply.pop_back();
      return reply;
    }
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0)
      throw OracleError("external oracle '" + name_ + "' did not reply within " + std::to_string(timeout.count()) +
                        " ms");
    pollfd pfd{from_child_, POLLIN, 0};
    int ready = ::poll(&pfd, 1, static_cast<int>(left.count()));
    if (ready < 0) {
      if (errno == EINTR) continue;
      throw OracleError("poll: " + errno_text());
    }
    if (ready == 0) continue;
    char buf[4096];
    ssize_t r = ::read(from_child_, buf, sizeof buf);
    if (r < 0) {
      if (errno == EINTR) continue;
      throw OracleError("reading from external oracle '" + name_ + "': " + errno_text());
    }
    if (r == 0) throw OracleError("external oracle '" + name_ + "' exited without replying");
    pending_.append(buf, static_cast<std::size_t>(r));
  }
}

}  // namespace spp
