// Copyright 2026 The qloop Authors
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

namespace qloop {

/// Base of every error raised by the runtime.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}

 protected:
  struct Tag {};
  Error(Tag, const std::string &what) : std::runtime_error(what) {}
};

#define QLOOP_DEFINE_ERROR(Name, Base)           \
  class Name : public Base {                     \
   public:                                       \
    explicit Name(const std::string &what)       \
        : Base(Tag{}, #Name ": " + what) {}      \
                                                 \
   protected:                                    \
    Name(Tag, const std::string &what)           \
        : Base(Tag{}, what) {}                   \
  }

// Builder errors.
QLOOP_DEFINE_ERROR(ScopeViolation, Error);
QLOOP_DEFINE_ERROR(ScopeUnderflow, Error);
QLOOP_DEFINE_ERROR(DuplicateControl, Error);
QLOOP_DEFINE_ERROR(ControlTargetOverlap, Error);
QLOOP_DEFINE_ERROR(InvalidHandle, Error);
QLOOP_DEFINE_ERROR(UnknownFuture, Error);
QLOOP_DEFINE_ERROR(BadArgument, Error);

// A terminated process invalidates every handle it issued, so this is also
// an InvalidHandle.
class ProcessTerminated : public InvalidHandle {
 public:
  explicit ProcessTerminated(const std::string &what)
      : InvalidHandle(Tag{}, "ProcessTerminated: " + what) {}
};

// IR errors.
QLOOP_DEFINE_ERROR(MalformedCode, Error);

// Simulator errors.
QLOOP_DEFINE_ERROR(EngineFailure, Error);
QLOOP_DEFINE_ERROR(DegenerateState, EngineFailure);
QLOOP_DEFINE_ERROR(IndexOverlap, Error);
QLOOP_DEFINE_ERROR(IndexOutOfRange, Error);
QLOOP_DEFINE_ERROR(EntangledSelection, Error);

// Inspection errors.
QLOOP_DEFINE_ERROR(BadFormat, Error);
QLOOP_DEFINE_ERROR(WrongArity, Error);

#undef QLOOP_DEFINE_ERROR

}  // namespace qloop
