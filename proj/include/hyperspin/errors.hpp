// Copyright 2026 The hyperspin Authors
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

namespace hyperspin {

/// Base class for every error raised by the library. Each subclass names
/// the violated precondition so callers can map them onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HYPERSPIN_DEFINE_ERROR(Name)          \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(std::string(#Name ": ") + what) {} \
  }

HYPERSPIN_DEFINE_ERROR(NonFiniteEntry);
HYPERSPIN_DEFINE_ERROR(NotHermitian);
HYPERSPIN_DEFINE_ERROR(InvalidState);
HYPERSPIN_DEFINE_ERROR(UnknownChannel);
HYPERSPIN_DEFINE_ERROR(NegativeDiscriminant);
HYPERSPIN_DEFINE_ERROR(NegativeTime);
HYPERSPIN_DEFINE_ERROR(InvalidKernel);
HYPERSPIN_DEFINE_ERROR(NotXState);
HYPERSPIN_DEFINE_ERROR(DomainError);
HYPERSPIN_DEFINE_ERROR(UnknownPreset);
HYPERSPIN_DEFINE_ERROR(IoError);

#undef HYPERSPIN_DEFINE_ERROR

}  // namespace hyperspin
