// Copyright 2026 The AMT Authors.
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "amt/amt_codec.hpp"
#include "amt/naive_codec.hpp"

namespace amt {

using TokenId = std::uint32_t;

// Coordinate value c in [0, bins) is token c. Specials follow the coordinate
// range: BOS = bins, EOS = bins + 1, PAD = bins + 2, AMP (`&`) = bins + 3.
struct Vocabulary {
  std::uint32_t bins = 128;

  constexpr TokenId bos() const { return bins; }
  constexpr TokenId eos() const { return bins + 1; }
  constexpr TokenId pad() const { return bins + 2; }
  constexpr TokenId amp() const { return bins + 3; }
  constexpr std::uint32_t size() const { return bins + 4; }
  constexpr bool is_coordinate(TokenId id) const { return id < bins; }
};

// Embedding-type annotation carried alongside every token.
enum class TokenType : std::uint8_t {
  full_face = 0,     // one of the three vertices that open a run
  strip_vertex = 1,  // the single vertex that continues a run
  amp = 2,
  control = 3,       // BOS, EOS, PAD
};

std::string_view to_string(TokenType type);

struct TokenSequence {
  std::uint32_t bins = 0;
  std::vector<TokenId> ids;
  std::vector<TokenType> types;

  // Tokens other than BOS/EOS/PAD; the quantity used for length ratios.
  std::size_t payload_length() const;
  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;
};

// Each vertex becomes three coordinate tokens in (z, y, x) order, wrapped in
// BOS ... EOS. Throws amt::Error if a coordinate falls outside the vocabulary.
TokenSequence encode(const AmtSequence& seq, std::span<const GridPoint> vertices,
                     const Vocabulary& vocab);
TokenSequence encode(const NaiveSequence& seq, std::span<const GridPoint> vertices,
                     const Vocabulary& vocab);

// Decoded item sequence together with the vertex table it indexes. Vertices
// are numbered by first occurrence in the stream.
struct DecodedAmt {
  AmtSequence sequence;
  std::vector<GridPoint> vertices;
};
struct DecodedNaive {
  NaiveSequence sequence;
  std::vector<GridPoint> vertices;
};

// Throw SequenceError (position = token index) for a missing BOS or EOS,
// unknown ids, a vertex cut short by `&` or EOS, or tags that contradict ids.
// Trailing PAD after EOS is accepted.
DecodedAmt decode_amt(const TokenSequence& tokens, const Vocabulary& vocab);
DecodedNaive decode_naive(const TokenSequence& tokens, const Vocabulary& vocab);

// Picks the codec from the stream: any AMP or strip-vertex token means AMT.
// A single triangle is encoded identically by both and decodes as naive.
std::variant<DecodedAmt, DecodedNaive> decode(const TokenSequence& tokens,
                                              const Vocabulary& vocab);

// Binary layout, all little-endian:
//   u32 magic "AMTK" | u32 version | u32 bins | u64 count |
//   count x (u32 id, u8 type)
inline constexpr std::uint32_t kTokenMagic = 0x4B544D41;
inline constexpr std::uint32_t kTokenVersion = 1;

std::vector<std::uint8_t> serialize(const TokenSequence& tokens);
// Throws FormatError on bad magic, unsupported version, a size that does not
// match the header, or an unknown type tag.
TokenSequence deserialize(std::span<const std::uint8_t> bytes);

// {"bins": B, "ids": [...], "types": ["FULL_FACE", ...]}
std::string to_json(const TokenSequence& tokens);
TokenSequence from_json(std::string_view json);

}  // namespace amt
