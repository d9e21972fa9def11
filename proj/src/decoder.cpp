#include "growth/decoder.hpp"

#include <algorithm>

#include "growth/errors.hpp"

namespace growth {

DecoderState::DecoderState(DegreeDistribution dist, std::uint32_t symbol_size,
                           DecoderMode mode)
    : dist_(std::move(dist)),
      symbol_size_(symbol_size),
      mode_(mode),
      data_(static_cast<std::size_t>(dist_.k()) * symbol_size, 0),
      recovered_flag_(dist_.k(), 0),
      waiting_on_(dist_.k()) {
  if (symbol_size == 0) throw InvalidArgument("decoder: symbol_size must be >= 1");
}

std::span<const std::uint8_t> DecoderState::symbol(std::uint32_t i) const {
  if (i >= dist_.k() || !recovered_flag_[i])
    throw InvalidArgument("decoder: symbol not recovered");
  return {data_.data() + static_cast<std::size_t>(i) * symbol_size_, symbol_size_};
}

void DecoderState::recover(std::uint32_t index, std::span<const std::uint8_t> value) {
  std::copy(value.begin(), value.end(),
            data_.begin() + static_cast<std::size_t>(index) * symbol_size_);
  recovered_flag_[index] = 1;
  ++recovered_count_;
  ++stats_.decoded;
  if (mode_ != DecoderMode::S) return;

  // Propagate through buffered packets until no reduction fires.
  ripple_.clear();
  ripple_.push_back(index);
  while (!ripple_.empty()) {
    const std::uint32_t sym = ripple_.back();
    ripple_.pop_back();
    auto ids = std::move(waiting_on_[sym]);
    waiting_on_[sym].clear();
    const std::uint8_t* sym_data = data_.data() + static_cast<std::size_t>(sym) * symbol_size_;
    for (std::uint32_t id : ids) {
      Pending& p = pending_[id];
      if (!p.alive) continue;
      for (std::uint32_t b = 0; b < symbol_size_; ++b) p.payload[b] ^= sym_data[b];
      p.unresolved.erase(std::find(p.unresolved.begin(), p.unresolved.end(), sym));
      if (p.unresolved.size() == 1) {
        const std::uint32_t last = p.unresolved[0];
        p.alive = false;
        --pending_alive_;
        if (!recovered_flag_[last]) {
          std::copy(p.payload.begin(), p.payload.end(),
                    data_.begin() + static_cast<std::size_t>(last) * symbol_size_);
          recovered_flag_[last] = 1;
          ++recovered_count_;
          ++stats_.decoded;
          ripple_.push_back(last);
        } else {
          ++stats_.discarded;  // became a duplicate while buffered
        }
      } else if (p.unresolved.empty()) {
        p.alive = false;
        --pending_alive_;
        ++stats_.discarded;
      }
    }
  }
}

void DecoderState::push(const EncodedPacket& packet) {
  if (packet.k != dist_.k())
    throw CorruptPacket("decoder: packet k does not match block");
  if (packet.symbol_size != symbol_size_ || packet.payload.size() != symbol_size_)
    throw CorruptPacket("decoder: packet symbol size does not match block");
  ++stats_.received;

  std::vector<std::uint32_t> neighbors = regenerate_neighbors(dist_, packet.esi);
  std::vector<std::uint8_t> payload = packet.payload;
  std::vector<std::uint32_t> unresolved;
  unresolved.reserve(neighbors.size());
  for (std::uint32_t idx : neighbors) {
    if (recovered_flag_[idx]) {
      const std::uint8_t* sym = data_.data() + static_cast<std::size_t>(idx) * symbol_size_;
      for (std::uint32_t b = 0; b < symbol_size_; ++b) payload[b] ^= sym[b];
    } else {
      unresolved.push_back(idx);
    }
  }

  if (unresolved.empty()) {
    ++stats_.discarded;  // fully redundant
    return;
  }
  if (unresolved.size() == 1) {
    recover(unresolved[0], payload);
    return;
  }
  if (mode_ == DecoderMode::D) {
    ++stats_.discarded;  // not immediately useful
    return;
  }

  const auto id = static_cast<std::uint32_t>(pending_.size());
  for (std::uint32_t idx : unresolved) waiting_on_[idx].push_back(id);
  pending_.push_back(Pending{std::move(unresolved), std::move(payload), true});
  ++pending_alive_;
}

std::vector<std::size_t> decode_stream(DecoderState& state,
                                       std::span<const EncodedPacket> packets) {
  std::vector<std::size_t> trace;
  trace.reserve(packets.size());
  for (const EncodedPacket& p : packets) {
    state.push(p);
    trace.push_back(state.recovered_count());
  }
  return trace;
}

}  // namespace growth
