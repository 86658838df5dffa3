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

#ifndef STABLULC_CERTIFICATE_HPP_
#define STABLULC_CERTIFICATE_HPP_

#include <stdexcept>
#include <string>

namespace stablulc {

enum class CertificateStatus {
  kCertified,
  kInconclusive,
  kHypothesisFailed,
  kFailed,
};

inline const char* status_name(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::kCertified:
      return "CERTIFIED";
    case CertificateStatus::kInconclusive:
      return "INCONCLUSIVE";
    case CertificateStatus::kHypothesisFailed:
      return "HYPOTHESIS_FAILED";
    case CertificateStatus::kFailed:
      return "FAILED";
  }
  return "UNKNOWN";
}

/// Outcome of an LU=LC certificate. Only kCertified carries a claim; the
/// other states never assert LU != LC.
struct Certificate {
  CertificateStatus status = CertificateStatus::kInconclusive;
  std::string theorem;  // "surfaceCode", "grid" or "msc"
  std::string details;

  bool certified() const { return status == CertificateStatus::kCertified; }

  /// "CERTIFIED theorem=grid details=..." or "<STATUS> theorem=... reason=...".
  std::string to_string() const {
    std::string s = status_name(status);
    s += " theorem=" + theorem;
    s += certified() ? " details=" : " reason=";
    s += details;
    return s;
  }
};

/// A structural precondition of a theorem-backed routine does not hold.
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace stablulc

#endif  // STABLULC_CERTIFICATE_HPP_
