//  Copyright 2026 The spectop Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef SPECTOP_ERRORS_HPP_
#define SPECTOP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace spectop {

enum class Errc {
  NotAPoset,
  NotALattice,
  NoBounds,
  GroundNotMeetClosed,
  GroundNotClosed,
  NotClosedElements,
  NotXTop,
  EmptySet,
  EmptySpace,
  ZeroSubmodule,
  Firstless,
  NotTopf,
  OracleDisagreement,
  BadSpec,
  TooLarge,
  BadInput,
  BadX,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace spectop

#endif  // SPECTOP_ERRORS_HPP_
