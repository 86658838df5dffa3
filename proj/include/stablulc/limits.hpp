// Copyright 2026 The Authors.
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

#ifndef STABLULC_LIMITS_HPP_
#define STABLULC_LIMITS_HPP_

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace stablulc {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

/// Thrown when an exhaustive enumeration would exceed the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t requested, std::uint64_t cap)
      : std::runtime_error(what + ": " + std::to_string(requested) +
                           " exceeds enumeration cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  std::uint64_t requested() const { return requested_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

/// Element-count cap for exhaustive enumerations. Reads STABLULC_ENUM_CAP
/// once; malformed values fall back to the default.
inline std::uint64_t enumeration_cap() {
  static const std::uint64_t cap = [] {
    const char* env = std::getenv("STABLULC_ENUM_CAP");
    if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return kDefaultEnumerationCap;
    return static_cast<std::uint64_t>(v);
  }();
  return cap;
}

/// Throws CapExceeded unless 2^bits elements fit under `cap`.
inline void require_enumerable(std::size_t bits, const std::string& what,
                               std::uint64_t cap = enumeration_cap()) {
  if (bits >= 63 || (std::uint64_t{1} << bits) > cap) {
    throw CapExceeded(what, bits >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits), cap);
  }
}

}  // namespace stablulc

#endif  // STABLULC_LIMITS_HPP_
