// trf/common.h
//
// Copyright 2026  The trflm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the Apache 2 License for the specific language governing permissions
// and limitations under the License.

#ifndef TRF_COMMON_H_
#define TRF_COMMON_H_

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace trf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by encode / corpus loading when a sentence length is out of range.
class LengthError : public Error {
 public:
  using Error::Error;
};

namespace internal {
inline void StrAppend(std::ostringstream&) {}
template <typename T, typename... Rest>
void StrAppend(std::ostringstream& os, const T& v, const Rest&... rest) {
  os << v;
  StrAppend(os, rest...);
}
}  // namespace internal

template <typename... Args>
std::string StrCat(const Args&... args) {
  std::ostringstream os;
  internal::StrAppend(os, args...);
  return os.str();
}

template <typename... Args>
[[noreturn]] void Fail(const Args&... args) {
  throw Error(StrCat(args...));
}

#define TRF_CHECK(cond, ...)                                              \
  do {                                                                    \
    if (!(cond)) {                                                        \
      ::trf::Fail("check failed: ", #cond, " (", __FILE__, ":", __LINE__, \
                  ") ", ::trf::StrCat(__VA_ARGS__));                      \
    }                                                                     \
  } while (0)

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

}  // namespace trf

#endif  // TRF_COMMON_H_
