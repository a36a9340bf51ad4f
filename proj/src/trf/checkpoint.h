// trf/checkpoint.h
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

#ifndef TRF_CHECKPOINT_H_
#define TRF_CHECKPOINT_H_

#include <string>

#include "trf/param_store.h"

namespace trf {

// Versioned binary container of named blocks:
//   magic "TRFCKPT\0", u32 version, u64 metadata length, metadata bytes
//   (UTF-8, typically JSON), u32 block count, then per block: u32 name
//   length, name bytes, u32 rank, u64 dims[rank], row-major values as raw
//   64-bit little-endian doubles. Round-trips are bit-exact.
void WriteCheckpoint(const std::string& path, const ParamStore& store,
                     const std::string& metadata);

// Returns the metadata; fills `store` with the blocks (values only, zero
// gradients).
std::string ReadCheckpoint(const std::string& path, ParamStore* store);

}  // namespace trf

#endif  // TRF_CHECKPOINT_H_
