#ifndef GROWTH_FILE_CODEC_HPP
#define GROWTH_FILE_CODEC_HPP

#include <cstdint>
#include <vector>

#include "growth/decoder.hpp"
#include "growth/degree_distribution.hpp"
#include "growth/packet.hpp"

namespace growth {

/** The degree distribution frozen into the file codec: the Growth
 *  distribution scaled to a reception count of 2k.  The decoder can rebuild
 *  it from the k field alone, and it keeps enough high-degree mass to finish
 *  full-file decoding (the static k-normalized table truncates at degree 2-3
 *  and cannot cover every symbol).
 */
DegreeDistribution codec_distribution(std::uint32_t k);

/** Splits raw bytes into a k-symbol block.  The final symbol is zero-padded
 *  and the padding length is recorded in a 4-byte big-endian trailer, so the
 *  recovered block maps back to the exact original bytes.
 */
SourceBlock block_from_bytes(std::uint32_t k, const std::vector<std::uint8_t>& bytes);

/** Inverse of block_from_bytes: strips the trailer and padding. */
std::vector<std::uint8_t> bytes_from_block(const std::vector<std::uint8_t>& block_data,
                                           std::uint32_t k, std::uint32_t symbol_size);

/** Encodes `count` packets with ESIs seed, seed+1, ..., seed+count-1. */
std::vector<EncodedPacket> encode_file(const SourceBlock& block,
                                       const DegreeDistribution& dist,
                                       std::uint64_t seed, std::uint64_t count);

}  // namespace growth

#endif
