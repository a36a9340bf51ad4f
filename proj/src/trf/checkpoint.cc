// trf/checkpoint.cc
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

#include "trf/checkpoint.h"

#include <bit>
#include <cstring>
#include <fstream>

namespace trf {

static_assert(std::endian::native == std::endian::little,
              "checkpoint format assumes a little-endian host");

namespace {

constexpr char kMagic[8] = {'T', 'R', 'F', 'C', 'K', 'P', 'T', '\0'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void WriteRaw(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T ReadRaw(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  TRF_CHECK(is.good(), "truncated checkpoint");
  return v;
}

}  // namespace

void WriteCheckpoint(const std::string& path, const ParamStore& store,
                     const std::string& metadata) {
  std::ofstream os(path, std::ios::binary);
  TRF_CHECK(os.good(), "cannot open ", path, " for writing");
  os.write(kMagic, sizeof(kMagic));
  WriteRaw(os, kVersion);
  WriteRaw(os, static_cast<std::uint64_t>(metadata.size()));
  os.write(metadata.data(), static_cast<std::streamsize>(metadata.size()));
  WriteRaw(os, static_cast<std::uint32_t>(store.num_blocks()));
  for (const auto& b : store.blocks()) {
    WriteRaw(os, static_cast<std::uint32_t>(b.name.size()));
    os.write(b.name.data(), static_cast<std::streamsize>(b.name.size()));
    WriteRaw(os, static_cast<std::uint32_t>(b.value.rank()));
    WriteRaw(os, static_cast<std::uint64_t>(b.value.rows()));
    if (b.value.rank() == 2) {
      WriteRaw(os, static_cast<std::uint64_t>(b.value.cols()));
    }
    os.write(reinterpret_cast<const char*>(b.value.data()),
             static_cast<std::streamsize>(sizeof(double) * b.value.size()));
  }
  TRF_CHECK(os.good(), "error writing ", path);
}

std::string ReadCheckpoint(const std::string& path, ParamStore* store) {
  std::ifstream is(path, std::ios::binary);
  TRF_CHECK(is.good(), "cannot open checkpoint ", path);
  char magic[8];
  is.read(magic, sizeof(magic));
  TRF_CHECK(is.good() && std::memcmp(magic, kMagic, sizeof(kMagic)) == 0,
            path, " is not a checkpoint file");
  auto version = ReadRaw<std::uint32_t>(is);
  TRF_CHECK(version == kVersion, "unsupported checkpoint version ", version);
  auto meta_len = ReadRaw<std::uint64_t>(is);
  std::string metadata(meta_len, '\0');
  is.read(metadata.data(), static_cast<std::streamsize>(meta_len));
  TRF_CHECK(is.good(), "truncated checkpoint metadata");
  auto num_blocks = ReadRaw<std::uint32_t>(is);
  for (std::uint32_t i = 0; i < num_blocks; ++i) {
    auto name_len = ReadRaw<std::uint32_t>(is);
    std::string name(name_len, '\0');
    is.read(name.data(), name_len);
    auto rank = ReadRaw<std::uint32_t>(is);
    TRF_CHECK(rank == 1 || rank == 2, "bad block rank ", rank);
    auto rows = static_cast<int>(ReadRaw<std::uint64_t>(is));
    int cols = rank == 2 ? static_cast<int>(ReadRaw<std::uint64_t>(is)) : 1;
    Tensor t;
    t.Resize(static_cast<int>(rank), rows, cols);
    is.read(reinterpret_cast<char*>(t.data()),
            static_cast<std::streamsize>(sizeof(double) * t.size()));
    TRF_CHECK(is.good(), "truncated block ", name);
    store->Add(name, std::move(t));
  }
  return metadata;
}

}  // namespace trf
