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

#include "amt/encoding.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include <json.hpp>

namespace amt {
namespace {

constexpr std::size_t kHeaderSize = 4 + 4 + 4 + 8;
constexpr std::size_t kEntrySize = 4 + 1;

void push_vertex(TokenSequence& out, std::span<const GridPoint> vertices, VertexId v,
                 TokenType type, const Vocabulary& vocab, std::size_t item) {
  if (v >= vertices.size()) {
    throw SequenceError(item, "vertex " + std::to_string(v) + " out of range");
  }
  for (const std::int32_t c : vertices[v]) {
    if (c < 0 || static_cast<std::uint32_t>(c) >= vocab.bins) {
      throw Error("coordinate " + std::to_string(c) + " of vertex " + std::to_string(v) +
                  " does not fit a vocabulary of " + std::to_string(vocab.bins) + " bins");
    }
    out.ids.push_back(static_cast<TokenId>(c));
    out.types.push_back(type);
  }
}

void push_control(TokenSequence& out, TokenId id) {
  out.ids.push_back(id);
  out.types.push_back(TokenType::control);
}

struct Unit {
  bool amp = false;
  GridPoint point{};
  TokenType type = TokenType::full_face;
  std::size_t position = 0;  // first token of the unit
};

struct Scan {
  std::vector<Unit> units;
  std::size_t eos_position = 0;
};

// Splits a framed token stream into vertices and `&` markers.
Scan scan(const TokenSequence& tokens, const Vocabulary& vocab) {
  const auto& ids = tokens.ids;
  const auto& types = tokens.types;
  if (ids.size() != types.size()) {
    throw SequenceError(std::min(ids.size(), types.size()), "ids and types differ in length");
  }
  if (tokens.bins != 0 && tokens.bins != vocab.bins) {
    throw Error("token stream uses " + std::to_string(tokens.bins) +
                " bins, vocabulary has " + std::to_string(vocab.bins));
  }
  if (ids.empty() || ids[0] != vocab.bos()) throw SequenceError(0, "missing BOS");
  if (types[0] != TokenType::control) throw SequenceError(0, "BOS must be tagged CONTROL");

  Scan out;
  std::optional<std::size_t> eos;
  Unit pending;
  int filled = 0;
  for (std::size_t i = 1; i < ids.size(); ++i) {
    const TokenId id = ids[i];
    if (id == vocab.eos()) {
      if (filled) throw SequenceError(i, "vertex truncated by EOS");
      if (types[i] != TokenType::control) throw SequenceError(i, "EOS must be tagged CONTROL");
      eos = i;
      break;
    }
    if (id == vocab.amp()) {
      if (filled) throw SequenceError(i, "vertex truncated by '&'");
      if (types[i] != TokenType::amp) throw SequenceError(i, "'&' must be tagged AMP");
      out.units.push_back(Unit{true, {}, TokenType::amp, i});
      continue;
    }
    if (id == vocab.bos() || id == vocab.pad()) {
      throw SequenceError(i, "unexpected control token inside payload");
    }
    if (!vocab.is_coordinate(id)) throw SequenceError(i, "unknown token id " + std::to_string(id));
    if (types[i] != TokenType::full_face && types[i] != TokenType::strip_vertex) {
      throw SequenceError(i, "coordinate token tagged " + std::string(to_string(types[i])));
    }
    if (filled == 0) {
      pending = Unit{false, {}, types[i], i};
    } else if (types[i] != pending.type) {
      throw SequenceError(i, "coordinate tags disagree within one vertex");
    }
    pending.point[filled++] = static_cast<std::int32_t>(id);
    if (filled == 3) {
      out.units.push_back(pending);
      filled = 0;
    }
  }
  if (!eos) throw SequenceError(ids.size(), "missing EOS");
  for (std::size_t i = *eos + 1; i < ids.size(); ++i) {
    if (ids[i] != vocab.pad() || types[i] != TokenType::control) {
      throw SequenceError(i, "only PAD may follow EOS");
    }
  }
  out.eos_position = *eos;
  return out;
}

VertexId intern(std::map<GridPoint, VertexId>& index, std::vector<GridPoint>& table,
                const GridPoint& p) {
  const auto [it, inserted] = index.try_emplace(p, static_cast<VertexId>(table.size()));
  if (inserted) table.push_back(p);
  return it->second;
}

DecodedAmt decode_amt_units(const Scan& scanned) {
  DecodedAmt out;
  std::map<GridPoint, VertexId> index;
  for (const Unit& u : scanned.units) {
    out.sequence.items.push_back(u.amp ? AmtItem::restart()
                                       : AmtItem::vertex(intern(index, out.vertices, u.point)));
  }
  out.sequence.source_face_count = sequence_stats(out.sequence).faces_encoded;
  return out;
}

DecodedNaive decode_naive_units(const Scan& scanned) {
  DecodedNaive out;
  std::map<GridPoint, VertexId> index;
  for (const Unit& u : scanned.units) {
    if (u.amp) throw SequenceError(u.position, "'&' in a naive stream");
    if (u.type != TokenType::full_face) {
      throw SequenceError(u.position, "strip vertex in a naive stream");
    }
    out.sequence.items.push_back(intern(index, out.vertices, u.point));
  }
  if (out.sequence.items.size() % 3 != 0) {
    throw SequenceError(scanned.eos_position, "face truncated by EOS");
  }
  return out;
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_le(std::span<const std::uint8_t> bytes, std::size_t at, int width) {
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) v |= std::uint64_t{bytes[at + i]} << (8 * i);
  return v;
}

TokenType type_from_string(std::string_view s) {
  if (s == "FULL_FACE") return TokenType::full_face;
  if (s == "STRIP_VERTEX") return TokenType::strip_vertex;
  if (s == "AMP") return TokenType::amp;
  if (s == "CONTROL") return TokenType::control;
  throw FormatError("unknown token type '" + std::string(s) + "'");
}

}  // namespace

std::string_view to_string(TokenType type) {
  switch (type) {
    case TokenType::full_face:
      return "FULL_FACE";
    case TokenType::strip_vertex:
      return "STRIP_VERTEX";
    case TokenType::amp:
      return "AMP";
    case TokenType::control:
      return "CONTROL";
  }
  return "UNKNOWN";
}

std::size_t TokenSequence::payload_length() const {
  std::size_t n = 0;
  for (const TokenType t : types) n += t != TokenType::control;
  return n;
}

TokenSequence encode(const AmtSequence& seq, std::span<const GridPoint> vertices,
                     const Vocabulary& vocab) {
  TokenSequence out;
  out.bins = vocab.bins;
  out.ids.reserve(3 * seq.items.size() + 2);
  out.types.reserve(3 * seq.items.size() + 2);
  push_control(out, vocab.bos());
  std::size_t run = 0;
  for (std::size_t i = 0; i < seq.items.size(); ++i) {
    const AmtItem item = seq.items[i];
    if (item.is_restart()) {
      out.ids.push_back(vocab.amp());
      out.types.push_back(TokenType::amp);
      run = 0;
      continue;
    }
    const TokenType type = ++run <= 3 ? TokenType::full_face : TokenType::strip_vertex;
    push_vertex(out, vertices, item.index(), type, vocab, i);
  }
  push_control(out, vocab.eos());
  return out;
}

TokenSequence encode(const NaiveSequence& seq, std::span<const GridPoint> vertices,
                     const Vocabulary& vocab) {
  TokenSequence out;
  out.bins = vocab.bins;
  out.ids.reserve(3 * seq.items.size() + 2);
  out.types.reserve(3 * seq.items.size() + 2);
  push_control(out, vocab.bos());
  for (std::size_t i = 0; i < seq.items.size(); ++i) {
    push_vertex(out, vertices, seq.items[i], TokenType::full_face, vocab, i);
  }
  push_control(out, vocab.eos());
  return out;
}

DecodedAmt decode_amt(const TokenSequence& tokens, const Vocabulary& vocab) {
  return decode_amt_units(scan(tokens, vocab));
}

DecodedNaive decode_naive(const TokenSequence& tokens, const Vocabulary& vocab) {
  return decode_naive_units(scan(tokens, vocab));
}

std::variant<DecodedAmt, DecodedNaive> decode(const TokenSequence& tokens,
                                              const Vocabulary& vocab) {
  const Scan scanned = scan(tokens, vocab);
  for (const Unit& u : scanned.units) {
    if (u.amp || u.type == TokenType::strip_vertex) return decode_amt_units(scanned);
  }
  return decode_naive_units(scanned);
}

std::vector<std::uint8_t> serialize(const TokenSequence& tokens) {
  if (tokens.ids.size() != tokens.types.size()) {
    throw Error("ids and types differ in length");
  }
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + kEntrySize * tokens.ids.size());
  put_u32(out, kTokenMagic);
  put_u32(out, kTokenVersion);
  put_u32(out, tokens.bins);
  put_u64(out, tokens.ids.size());
  for (std::size_t i = 0; i < tokens.ids.size(); ++i) {
    put_u32(out, tokens.ids[i]);
    out.push_back(static_cast<std::uint8_t>(tokens.types[i]));
  }
  return out;
}

TokenSequence deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) throw FormatError("truncated header");
  if (get_le(bytes, 0, 4) != kTokenMagic) throw FormatError("bad magic");
  const auto version = get_le(bytes, 4, 4);
  if (version != kTokenVersion) {
    throw FormatError("unsupported version " + std::to_string(version));
  }
  TokenSequence out;
  out.bins = static_cast<std::uint32_t>(get_le(bytes, 8, 4));
  const std::uint64_t count = get_le(bytes, 12, 8);
  const std::size_t available = (bytes.size() - kHeaderSize) / kEntrySize;
  if (count != available || (bytes.size() - kHeaderSize) % kEntrySize != 0) {
    throw FormatError("header declares " + std::to_string(count) + " tokens, file holds " +
                      std::to_string(bytes.size() - kHeaderSize) + " payload bytes");
  }
  out.ids.resize(count);
  out.types.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t at = kHeaderSize + i * kEntrySize;
    out.ids[i] = static_cast<TokenId>(get_le(bytes, at, 4));
    const std::uint8_t type = bytes[at + 4];
    if (type > static_cast<std::uint8_t>(TokenType::control)) {
      throw FormatError("unknown type tag " + std::to_string(type) + " at token " +
                        std::to_string(i));
    }
    out.types[i] = static_cast<TokenType>(type);
  }
  return out;
}

std::string to_json(const TokenSequence& tokens) {
  nlohmann::json j;
  j["bins"] = tokens.bins;
  j["ids"] = tokens.ids;
  auto& types = j["types"] = nlohmann::json::array();
  for (const TokenType t : tokens.types) types.push_back(to_string(t));
  return j.dump();
}

TokenSequence from_json(std::string_view json) {
  try {
    const auto j = nlohmann::json::parse(json);
    TokenSequence out;
    out.bins = j.at("bins").get<std::uint32_t>();
    out.ids = j.at("ids").get<std::vector<TokenId>>();
    for (const auto& t : j.at("types")) out.types.push_back(type_from_string(t.get<std::string>()));
    if (out.ids.size() != out.types.size()) throw FormatError("ids and types differ in length");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad token JSON: ") + e.what());
  }
}

}  // namespace amt
