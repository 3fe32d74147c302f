#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

namespace apg {

/// Hash for word-vector keys in std::unordered_map.
struct TranspositionKeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : k) h = (h ^ w) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

/// Open-addressing table from exact word-string keys to a (lower, upper)
/// bound pair. Keys live in a shared pool so lookups never allocate. When a
/// capacity cap is reached the table is wiped rather than grown.
class TranspositionTable {
 public:
  struct Entry {
    std::int8_t lower = -1;
    std::int8_t upper = 1;
  };

  explicit TranspositionTable(std::size_t max_entries = std::size_t{1} << 23,
                              std::size_t max_pool_words = std::size_t{1} << 26)
      : max_entries_(max_entries), max_pool_words_(max_pool_words) {
    reset(1024);
  }

  void clear() {
    if (used_ == 0) return;
    reset(slots_.size() > 1024 && used_ < slots_.size() / 16 ? slots_.size() / 4 : slots_.size());
  }

  std::size_t size() const { return used_; }

  const Entry* find(std::span<const std::uint64_t> key) const {
    const std::uint64_t h = hash(key);
    std::size_t i = h & mask_;
    while (true) {
      const Slot& s = slots_[i];
      if (s.len == 0) return nullptr;
      if (s.hash == h && matches(s, key)) return &s.entry;
      i = (i + 1) & mask_;
    }
  }

  void store(std::span<const std::uint64_t> key, Entry e) {
    if ((used_ + 1) * 2 > slots_.size()) {
      if (slots_.size() >= max_entries_ * 2) {
        reset(slots_.size());
      } else {
        grow();
      }
    }
    if (pool_.size() + key.size() > max_pool_words_) reset(slots_.size());
    const std::uint64_t h = hash(key);
    std::size_t i = h & mask_;
    while (true) {
      Slot& s = slots_[i];
      if (s.len == 0) {
        s.hash = h;
        s.offset = pool_.size();
        s.len = static_cast<std::uint32_t>(key.size());
        s.entry = e;
        pool_.insert(pool_.end(), key.begin(), key.end());
        ++used_;
        return;
      }
      if (s.hash == h && matches(s, key)) {
        s.entry = e;
        return;
      }
      i = (i + 1) & mask_;
    }
  }

 private:
  struct Slot {
    std::uint64_t hash = 0;
    std::size_t offset = 0;
    std::uint32_t len = 0;
    Entry entry;
  };

  static std::uint64_t hash(std::span<const std::uint64_t> key) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ key.size();
    for (auto w : key) {
      h ^= w;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
  }

  bool matches(const Slot& s, std::span<const std::uint64_t> key) const {
    return s.len == key.size() &&
           std::memcmp(pool_.data() + s.offset, key.data(), key.size() * sizeof(std::uint64_t)) == 0;
  }

  void reset(std::size_t capacity) {
    slots_.assign(capacity, Slot{});
    mask_ = capacity - 1;
    pool_.clear();
    used_ = 0;
  }

  void grow() {
    std::vector<Slot> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, Slot{});
    mask_ = slots_.size() - 1;
    for (const Slot& s : old) {
      if (s.len == 0) continue;
      std::size_t i = s.hash & mask_;
      while (slots_[i].len != 0) i = (i + 1) & mask_;
      slots_[i] = s;
    }
  }

  std::vector<Slot> slots_;
  std::vector<std::uint64_t> pool_;
  std::size_t mask_ = 0;
  std::size_t used_ = 0;
  std::size_t max_entries_;
  std::size_t max_pool_words_;
};

}  // namespace apg
