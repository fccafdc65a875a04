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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qloop/process.hpp"

namespace qloop {

/// A bundled program, built through the builder API on every run.
struct Example {
  std::string name;
  std::string description;
  std::function<void(Process &)> build;
};

/// All bundled examples, in listing order.
const std::vector<Example> &examples();

/// nullptr when `name` is not registered.
const Example *find_example(std::string_view name);

}  // namespace qloop
