// SPDX-License-Identifier: Apache-2.0
//
// waimforge - WAIM superstrate synthesis for printed patch phased arrays
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef WAIMFORGE_THREADING_HPP
#define WAIMFORGE_THREADING_HPP

#include <cstddef>
#include <functional>

namespace waimforge {

/// Worker count for grid evaluations: the WAIMFORGE_THREADS environment
/// variable if set (0 = auto), else hardware concurrency. Overridable
/// programmatically.
unsigned evaluation_threads();
void set_evaluation_threads(unsigned n); // 0 restores auto/env behaviour

/// fn(i) for i in [0, n), distributed over evaluation_threads() workers.
/// Each index must write only to its own output slot; the aggregation order
/// is the caller's, so results stay deterministic. The first exception is
/// rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace waimforge

#endif
