// trf/threading.h
//
// Copyright 2026  The trflm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the Apache 2 License for the specific language governing permissions
// and limitations under the License.

#ifndef TRF_THREADING_H_
#define TRF_THREADING_H_

#include <cstdint>

namespace trf {

// Worker cap for all OpenMP regions. 0 keeps the OpenMP default.
void SetMaxThreads(int n);
int MaxThreads();

// Fixed-size chunking used by the deterministic parallel reductions.
// Chunk boundaries depend only on the problem size, never on the worker
// count, so merged results are bit-identical for any number of threads.
inline constexpr int kGradChunk = 16;
inline constexpr std::int64_t kEnumBlock = 4096;

inline int NumChunks(int n, int chunk) { return (n + chunk - 1) / chunk; }
inline std::int64_t NumBlocks(std::int64_t n, std::int64_t block) {
  return (n + block - 1) / block;
}

}  // namespace trf

#endif  // TRF_THREADING_H_
