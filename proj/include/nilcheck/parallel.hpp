/*
   Copyright 2026 The nilcheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

namespace nilcheck {

/// Worker count for the OpenMP kernels: NILCHECK_THREADS when set, else the OpenMP default.
int thread_budget() noexcept;

/// Work below this many multiply-adds stays on the serial path.
inline constexpr long kParallelThreshold = 200000;

}  // namespace nilcheck
