#include "mvfilter/subset.hpp"

#include <bit>

#include "mvfilter/errors.hpp"

namespace mvfilter {

Subset::Subset(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

Subset::Subset(std::size_t universe, std::initializer_list<std::size_t> members)
    : Subset(universe) {
  for (auto m : members) insert(m);
}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

void Subset::insert(std::size_t i) {
  if (i >= universe_) throw InvalidArgument("subset index out of range");
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void Subset::erase(std::size_t i) {
  if (i >= universe_) throw InvalidArgument("subset index out of range");
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::size_t Subset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Subset::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

void Subset::check_same_universe(const Subset& other) const {
  if (universe_ != other.universe_)
    throw InvalidArgument("subsets over different carriers");
}

bool Subset::is_subset_of(const Subset& other) const {
  check_same_universe(other);
  for (std::size_t k = 0; k < words_.size(); ++k)
    if ((words_[k] & ~other.words_[k]) != 0) return false;
  return true;
}

bool Subset::intersects(const Subset& other) const {
  check_same_universe(other);
  for (std::size_t k = 0; k < words_.size(); ++k)
    if ((words_[k] & other.words_[k]) != 0) return true;
  return false;
}

Subset Subset::complement() const {
  Subset c(universe_);
  for (std::size_t k = 0; k < words_.size(); ++k) c.words_[k] = ~words_[k];
  if (universe_ % 64 != 0 && !c.words_.empty())
    c.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  return c;
}

Subset& Subset::operator&=(const Subset& other) {
  check_same_universe(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

Subset& Subset::operator|=(const Subset& other) {
  check_same_universe(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < universe_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  for (std::size_t k = a.words_.size(); k-- > 0;)
    if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace mvfilter
