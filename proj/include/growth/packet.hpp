#ifndef GROWTH_PACKET_HPP
#define GROWTH_PACKET_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "growth/degree_distribution.hpp"

namespace growth {

/** A block of k equal-length source symbols. Immutable after construction. */
class SourceBlock {
public:
  SourceBlock(std::uint32_t k, std::uint32_t symbol_size, std::vector<std::uint8_t> data);

  std::uint32_t k() const { return k_; }
  std::uint32_t symbol_size() const { return symbol_size_; }
  std::span<const std::uint8_t> symbol(std::uint32_t i) const;
  const std::vector<std::uint8_t>& data() const { return data_; }

private:
  std::uint32_t k_;
  std::uint32_t symbol_size_;
  std::vector<std::uint8_t> data_;  // k * symbol_size bytes
};

/** One encoded symbol on the wire: the ESI seed plus the XOR payload.
 *
 *  Wire format (big-endian, bit-exact):
 *    [esi: 8 bytes][k: 4 bytes][symbol_size: 4 bytes][payload: symbol_size bytes]
 */
struct EncodedPacket {
  std::uint64_t esi = 0;
  std::uint32_t k = 0;
  std::uint32_t symbol_size = 0;
  std::vector<std::uint8_t> payload;

  static constexpr std::size_t kHeaderSize = 16;
};

/** Regenerates the (degree, neighbor set) a given ESI encodes under `dist`.
 *  Deterministic and identical on encoder and decoder: the ESI seeds a
 *  SplitMix64 stream; the first draw picks the degree by inverse CDF, the
 *  following draws run a sparse Fisher-Yates prefix over [0, k).
 */
std::vector<std::uint32_t> regenerate_neighbors(const DegreeDistribution& dist,
                                                std::uint64_t esi);

/** Encodes one packet: XOR of the symbols selected by `esi`. */
EncodedPacket encode(const SourceBlock& block, const DegreeDistribution& dist,
                     std::uint64_t esi);

void write_packet(std::ostream& out, const EncodedPacket& packet);

/** Reads the next packet; std::nullopt on clean EOF, CorruptPacket on a
 *  truncated or inconsistent record.
 */
std::optional<EncodedPacket> read_packet(std::istream& in);

}  // namespace growth

#endif
