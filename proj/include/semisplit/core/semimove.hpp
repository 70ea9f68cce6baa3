#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

namespace semisplit {

using PlayerId = int;

inline constexpr int kMaxPlayers = 2;

// Final score per player, in [0, 100].
using Scores = std::array<double, kMaxPlayers>;

inline constexpr double kMaxScore = 100.0;

// Game-specific canonical descriptor of a full move, independent of how the
// move is split. Used to compare encodings of the same rules.
using MoveKey = std::uint64_t;

// One edge of a semisplit game tree. The code is unique within its source
// state and carries the same meaning in every state where it appears, so it
// doubles as a MAST key.
struct Semimove {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(const Semimove&, const Semimove&) = default;
};

// Packs a per-game kind tag with a payload; kinds are game-local.
constexpr Semimove make_semimove(std::uint32_t kind, std::uint32_t payload) {
  return Semimove{(kind << 24) | (payload & 0xFFFFFFu)};
}
constexpr std::uint32_t semimove_kind(Semimove m) { return m.code >> 24; }
constexpr std::uint32_t semimove_payload(Semimove m) { return m.code & 0xFFFFFFu; }

// A path of semimoves with nodal states only at its ends. Stored inline;
// no shipped encoding needs more than kMaxLength semimoves per move.
class Submove {
 public:
  static constexpr std::size_t kMaxLength = 8;

  Submove() = default;
  explicit Submove(Semimove m) { push_back(m); }
  Submove(std::initializer_list<Semimove> ms) {
    for (Semimove m : ms) push_back(m);
  }

  void push_back(Semimove m) {
    assert(size_ < kMaxLength);
    items_[size_++] = m;
  }
  void pop_back() {
    assert(size_ > 0);
    --size_;
  }
  void clear() { size_ = 0; }
  void append(const Submove& other) {
    for (Semimove m : other) push_back(m);
  }

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] bool empty() const { return size_ == 0; }
  Semimove operator[](std::size_t i) const {
    assert(i < size_);
    return items_[i];
  }
  [[nodiscard]] Semimove front() const { return (*this)[0]; }
  [[nodiscard]] Semimove back() const { return (*this)[size_ - 1]; }

  [[nodiscard]] const Semimove* begin() const { return items_.data(); }
  [[nodiscard]] const Semimove* end() const { return items_.data() + size_; }
  [[nodiscard]] std::span<const Semimove> span() const { return {items_.data(), size_}; }

  // First `n` semimoves.
  [[nodiscard]] Submove prefix(std::size_t n) const {
    assert(n <= size_);
    Submove p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(items_[i]);
    return p;
  }

  friend Submove concatenate(Submove a, const Submove& b) {
    a.append(b);
    return a;
  }

  friend bool operator==(const Submove& a, const Submove& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend std::strong_ordering operator<=>(const Submove& a, const Submove& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::array<Semimove, kMaxLength> items_{};
  std::uint8_t size_ = 0;
};

std::string to_string(const Submove& m);

}  // namespace semisplit

template <>
struct std::hash<semisplit::Semimove> {
  std::size_t operator()(semisplit::Semimove m) const noexcept {
    std::uint64_t x = m.code;
    x *= 0x9E3779B97F4A7C15ull;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

template <>
struct std::hash<semisplit::Submove> {
  std::size_t operator()(const semisplit::Submove& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull ^ s.size();
    for (semisplit::Semimove m : s) {
      h ^= m.code;
      h *= 0x100000001b3ull;
      h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
  }
};
