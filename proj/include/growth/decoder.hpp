#ifndef GROWTH_DECODER_HPP
#define GROWTH_DECODER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "growth/degree_distribution.hpp"
#include "growth/packet.hpp"

namespace growth {

enum class DecoderMode : std::uint8_t {
  D,  ///< on-the-fly: packets that are not immediately useful are dropped
  S,  ///< stored: buffered packets are re-examined after every recovery
};

struct DecoderStats {
  std::uint64_t received = 0;
  std::uint64_t discarded = 0;  ///< redundant (reduced to degree 0) or, in mode D, not useful
  std::uint64_t decoded = 0;    ///< source symbols recovered
};

/** Peeling decoder state. Single-owner, mutated sequentially. */
class DecoderState {
public:
  DecoderState(DegreeDistribution dist, std::uint32_t symbol_size, DecoderMode mode);

  /** Feeds one packet; recovers whatever becomes instantaneously decodable. */
  void push(const EncodedPacket& packet);

  std::uint32_t k() const { return dist_.k(); }
  DecoderMode mode() const { return mode_; }
  std::size_t recovered_count() const { return recovered_count_; }
  bool complete() const { return recovered_count_ == dist_.k(); }
  bool is_recovered(std::uint32_t i) const { return recovered_flag_[i] != 0; }
  std::span<const std::uint8_t> symbol(std::uint32_t i) const;
  std::size_t pending_count() const { return pending_alive_; }
  const DecoderStats& stats() const { return stats_; }

  /** Concatenated source data; nullopt until decoding is complete. */
  std::optional<std::vector<std::uint8_t>> assemble() const;

private:
  struct Pending {
    std::vector<std::uint32_t> unresolved;  // still-unknown neighbors
    std::vector<std::uint8_t> payload;      // reduced payload
    bool alive = false;
  };

  void recover(std::uint32_t index, std::span<const std::uint8_t> value);

  DegreeDistribution dist_;
  std::uint32_t symbol_size_;
  DecoderMode mode_;
  std::vector<std::uint8_t> data_;           // k * symbol_size
  std::vector<std::uint8_t> recovered_flag_; // per symbol
  std::size_t recovered_count_ = 0;
  DecoderStats stats_;
  std::vector<Pending> pending_;
  std::vector<std::vector<std::uint32_t>> waiting_on_;  // symbol -> pending ids
  std::size_t pending_alive_ = 0;
  std::vector<std::uint32_t> ripple_;  // recovery worklist (reused)
};

/** Batch driver: pushes packets in order and records |L| after each one. */
std::vector<std::size_t> decode_stream(DecoderState& state,
                                       std::span<const EncodedPacket> packets);

}  // namespace growth

#endif
