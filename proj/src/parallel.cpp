// Copyright 2026 The Groves Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "groves/parallel.hpp"

#include <cstdlib>
#include <string>

namespace groves {

std::size_t worker_count() {
  const std::size_t hardware = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GROVES_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap > 0) return static_cast<std::size_t>(cap);
    } catch (const std::exception&) {
      // unparsable values fall through to the hardware default
    }
  }
  return hardware;
}

}  // namespace groves
