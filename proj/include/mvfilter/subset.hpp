#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mvfilter {

/// Membership mask over the indices 0..universe-1 of a finite carrier.
class Subset {
public:
  Subset() = default;
  explicit Subset(std::size_t universe);
  Subset(std::size_t universe, std::initializer_list<std::size_t> members);

  static Subset full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const noexcept {
    return i < universe_ && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
  }
  void insert(std::size_t i);
  void erase(std::size_t i);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == universe_; }

  bool is_subset_of(const Subset& other) const;
  bool is_proper_subset_of(const Subset& other) const {
    return is_subset_of(other) && *this != other;
  }
  bool intersects(const Subset& other) const;

  Subset complement() const;
  Subset& operator&=(const Subset& other);
  Subset& operator|=(const Subset& other);
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  Subset minus(const Subset& other) const { return *this & other.complement(); }

  /// Members in ascending index order.
  std::vector<std::size_t> elements() const;

  friend bool operator==(const Subset& a, const Subset& b) = default;
  /// Orders by the mask read as an unsigned integer (bit i has weight 2^i).
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

private:
  void check_same_universe(const Subset& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mvfilter
