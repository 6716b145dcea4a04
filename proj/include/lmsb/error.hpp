// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lmsb {

enum class ErrorKind {
  invalid_input,
  log_overflow,
  no_fit,
  origin_not_interior,
  not_regular,
  rank_deficient,
  ansatz_insufficient,
  not_integrable,
  missing_ambiguity,
  division_by_zero,
  unknown_model,
  io,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lmsb
