#include "omegasub/bool_relation.hpp"

#include <iterator>

namespace omegasub {

std::uint64_t mix_hash(std::uint64_t seed, std::uint64_t value) {
  // splitmix64 finaliser over the combined value
  std::uint64_t z = seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

BoolRelation BoolRelation::identity(std::size_t n) {
  BoolRelation r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

StateSet BoolRelation::post(const StateSet& from) const {
  StateSet out(size());
  for (auto i = from.find_first(); i != StateSet::npos; i = from.find_next(i)) out |= rows_[i];
  return out;
}

bool BoolRelation::none() const {
  for (const auto& row : rows_)
    if (row.any()) return false;
  return true;
}

std::size_t BoolRelation::count() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.count();
  return total;
}

BoolRelation& BoolRelation::operator|=(const BoolRelation& other) {
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] |= other.rows_[i];
  return *this;
}

BoolRelation operator*(const BoolRelation& lhs, const BoolRelation& rhs) {
  BoolRelation out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out.rows_[i] = rhs.post(lhs.rows_[i]);
  return out;
}

std::uint64_t BoolRelation::fingerprint() const {
  std::uint64_t h = mix_hash(0, rows_.size());
  std::vector<std::uint64_t> blocks;
  for (const auto& row : rows_) {
    blocks.clear();
    boost::to_block_range(row, std::back_inserter(blocks));
    for (auto b : blocks) h = mix_hash(h, b);
  }
  return h;
}

}  // namespace omegasub
