#pragma once

#include <chrono>
#include <string>
#include <sys/types.h>
#include <vector>

namespace spp {

// A child process driven line by line over its standard streams. Closing
// the handle closes the child's stdin and reaps it (killing it if it does
// not exit promptly). Writing to a dead child raises OracleError instead of
// SIGPIPE: constructing a LineProcess ignores SIGPIPE process-wide.
class LineProcess {
 public:
  // Throws OracleError if the process cannot be started.
  explicit LineProcess(const std::vector<std::string>& command);
  ~LineProcess();
  LineProcess(const LineProcess&) = delete;
  LineProcess& operator=(const LineProcess&) = delete;

  // Sends `line` plus a newline and waits for one reply line (without the
  // newline). Throws OracleError on write failure, EOF or timeout.
  std::string exchange(const std::string& line, std::chrono::milliseconds timeout);

 private:
  void close_input();

  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string pending_;
  std::string name_;
};

}  // namespace spp
