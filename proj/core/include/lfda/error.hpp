// Copyright (c) 2026 The lfdanet-toolkit Authors. All Rights Reserved.
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

#pragma once

#include <stdexcept>
#include <string>

namespace lfda {

/// Base of every exception thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value or shape violates an operation's precondition.
/// The command-line tool maps this to exit code 3.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Missing/unreadable files, inconsistent scene sets, malformed containers.
/// The command-line tool maps this to exit code 2.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lfda
