#include "growth/packet.hpp"

#include <istream>
#include <ostream>
#include <unordered_map>

#include "growth/errors.hpp"
#include "growth/prng.hpp"

namespace growth {

SourceBlock::SourceBlock(std::uint32_t k, std::uint32_t symbol_size,
                         std::vector<std::uint8_t> data)
    : k_(k), symbol_size_(symbol_size), data_(std::move(data)) {
  if (k == 0) throw InvalidArgument("source block: k must be >= 1");
  if (symbol_size == 0) throw InvalidArgument("source block: symbol_size must be >= 1");
  if (data_.size() != static_cast<std::size_t>(k) * symbol_size)
    throw InvalidArgument("source block: data size must be k * symbol_size");
}

std::span<const std::uint8_t> SourceBlock::symbol(std::uint32_t i) const {
  if (i >= k_) throw InvalidArgument("source block: symbol index out of range");
  return {data_.data() + static_cast<std::size_t>(i) * symbol_size_, symbol_size_};
}

std::vector<std::uint32_t> regenerate_neighbors(const DegreeDistribution& dist,
                                                std::uint64_t esi) {
  SplitMix64 rng(esi);
  const std::uint32_t k = dist.k();
  std::uint32_t degree = dist.sample_degree(rng.next_double());
  if (degree == 0 || degree > k)
    throw CorruptPacket("regenerated degree out of range");

  // Sparse Fisher-Yates prefix: equivalent to shuffling [0, k) and taking the
  // first `degree` entries, without materializing the whole array.
  std::unordered_map<std::uint32_t, std::uint32_t> displaced;
  displaced.reserve(2 * degree);
  std::vector<std::uint32_t> neighbors;
  neighbors.reserve(degree);
  for (std::uint32_t j = 0; j < degree; ++j) {
    const std::uint32_t m =
        j + static_cast<std::uint32_t>(rng.next_below(k - j));
    auto at = [&](std::uint32_t idx) {
      auto it = displaced.find(idx);
      return it == displaced.end() ? idx : it->second;
    };
    const std::uint32_t value = at(m);
    displaced[m] = at(j);
    neighbors.push_back(value);
  }
  return neighbors;
}

EncodedPacket encode(const SourceBlock& block, const DegreeDistribution& dist,
                     std::uint64_t esi) {
  if (block.k() != dist.k())
    throw InvalidArgument("encode: block and distribution disagree on k");
  EncodedPacket packet;
  packet.esi = esi;
  packet.k = block.k();
  packet.symbol_size = block.symbol_size();
  packet.payload.assign(block.symbol_size(), 0);
  for (std::uint32_t idx : regenerate_neighbors(dist, esi)) {
    const auto sym = block.symbol(idx);
    for (std::uint32_t b = 0; b < block.symbol_size(); ++b)
      packet.payload[b] ^= sym[b];
  }
  return packet;
}

namespace {

void put_u64(std::ostream& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8)
    out.put(static_cast<char>((v >> shift) & 0xFF));
}

void put_u32(std::ostream& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8)
    out.put(static_cast<char>((v >> shift) & 0xFF));
}

bool get_bytes(std::istream& in, std::uint8_t* dst, std::size_t n) {
  in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
  return static_cast<std::size_t>(in.gcount()) == n;
}

}  // namespace

void write_packet(std::ostream& out, const EncodedPacket& packet) {
  put_u64(out, packet.esi);
  put_u32(out, packet.k);
  put_u32(out, packet.symbol_size);
  out.write(reinterpret_cast<const char*>(packet.payload.data()),
            static_cast<std::streamsize>(packet.payload.size()));
}

std::optional<EncodedPacket> read_packet(std::istream& in) {
  std::uint8_t header[EncodedPacket::kHeaderSize];
  in.read(reinterpret_cast<char*>(header), EncodedPacket::kHeaderSize);
  if (in.gcount() == 0 && in.eof()) return std::nullopt;
  if (static_cast<std::size_t>(in.gcount()) != EncodedPacket::kHeaderSize)
    throw CorruptPacket("truncated packet header");

  EncodedPacket packet;
  for (int i = 0; i < 8; ++i) packet.esi = (packet.esi << 8) | header[i];
  for (int i = 8; i < 12; ++i) packet.k = (packet.k << 8) | header[i];
  for (int i = 12; i < 16; ++i)
    packet.symbol_size = (packet.symbol_size << 8) | header[i];

  if (packet.k == 0) throw CorruptPacket("packet header: k = 0");
  if (packet.symbol_size == 0 || packet.symbol_size > (1u << 24))
    throw CorruptPacket("packet header: implausible symbol_size");

  packet.payload.resize(packet.symbol_size);
  if (!get_bytes(in, packet.payload.data(), packet.symbol_size))
    throw CorruptPacket("truncated packet payload");
  return packet;
}

}  // namespace growth
