/*
   Copyright 2026 The groebner-kernel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GROEBNER_COMMON_HPP
#define GROEBNER_COMMON_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace groebner {

/// Mathematical domain errors (division by zero, mixed fields, wrong
/// ordering class, precondition violations). CLI maps these to exit code 1.
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

/// Lexical/syntactic errors from the session language. Exit code 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) +
                           ", column " + std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

/// Raised by long-running engines when the cooperative deadline expires.
class TimeoutError : public MathError {
 public:
  explicit TimeoutError(const std::string& note)
      : MathError("timeout: " + note) {}
};

// Cooperative cancellation. A deadline is installed per thread (the CLI's
// --timeout flag); compute loops poll it every few hundred iterations.
namespace detail {

struct DeadlineState {
  bool armed = false;
  std::chrono::steady_clock::time_point due;
};

inline DeadlineState& deadline_state() {
  thread_local DeadlineState state;
  return state;
}

}  // namespace detail

class DeadlineGuard {
 public:
  explicit DeadlineGuard(double seconds) {
    auto& st = detail::deadline_state();
    prev_ = st;
    st.armed = true;
    st.due = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds));
  }
  DeadlineGuard(const DeadlineGuard&) = delete;
  DeadlineGuard& operator=(const DeadlineGuard&) = delete;
  ~DeadlineGuard() { detail::deadline_state() = prev_; }

 private:
  detail::DeadlineState prev_;
};

/// Throws TimeoutError when the active deadline has passed. `where` names the
/// stage for the partial-progress note.
inline void check_deadline(const char* where) {
  const auto& st = detail::deadline_state();
  if (st.armed && std::chrono::steady_clock::now() > st.due)
    throw TimeoutError(std::string("aborted during ") + where);
}

}  // namespace groebner

#endif  // GROEBNER_COMMON_HPP
