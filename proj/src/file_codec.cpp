#include "growth/file_codec.hpp"

#include "growth/errors.hpp"

namespace growth {

DegreeDistribution codec_distribution(std::uint32_t k) {
  return growth_distribution(k, 2 * static_cast<std::uint64_t>(k));
}

SourceBlock block_from_bytes(std::uint32_t k, const std::vector<std::uint8_t>& bytes) {
  if (k == 0) throw InvalidArgument("block_from_bytes: k must be >= 1");
  const std::uint64_t need = bytes.size() + 4;
  const std::uint32_t symbol_size = static_cast<std::uint32_t>((need + k - 1) / k);
  const std::uint64_t total = static_cast<std::uint64_t>(k) * symbol_size;
  const std::uint32_t padding = static_cast<std::uint32_t>(total - need);

  std::vector<std::uint8_t> data(total, 0);
  std::copy(bytes.begin(), bytes.end(), data.begin());
  for (int i = 0; i < 4; ++i)
    data[total - 4 + i] = static_cast<std::uint8_t>((padding >> (8 * (3 - i))) & 0xFF);
  return SourceBlock(k, symbol_size, std::move(data));
}

std::vector<std::uint8_t> bytes_from_block(const std::vector<std::uint8_t>& block_data,
                                           std::uint32_t k, std::uint32_t symbol_size) {
  const std::uint64_t total = static_cast<std::uint64_t>(k) * symbol_size;
  if (block_data.size() != total || total < 4)
    throw MalformedInput("bytes_from_block: block size mismatch");
  std::uint32_t padding = 0;
  for (int i = 0; i < 4; ++i) padding = (padding << 8) | block_data[total - 4 + i];
  if (padding > total - 4)
    throw MalformedInput("bytes_from_block: corrupt padding trailer");
  return {block_data.begin(),
          block_data.begin() + static_cast<std::ptrdiff_t>(total - 4 - padding)};
}

std::vector<EncodedPacket> encode_file(const SourceBlock& block,
                                       const DegreeDistribution& dist,
                                       std::uint64_t seed, std::uint64_t count) {
  std::vector<EncodedPacket> packets;
  packets.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i)
    packets.push_back(encode(block, dist, seed + i));
  return packets;
}

}  // namespace growth
