#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace omegasub {

using StateSet = boost::dynamic_bitset<std::uint64_t>;

/// Square boolean matrix over state indices: row i holds the successors of i.
/// Products compose relations left to right, so `(r * s)` relates q to q''
/// whenever q r q' and q' s q'' for some q'.
class BoolRelation {
 public:
  BoolRelation() = default;
  explicit BoolRelation(std::size_t n) : rows_(n, StateSet(n)) {}

  static BoolRelation identity(std::size_t n);

  std::size_t size() const { return rows_.size(); }
  bool test(std::size_t from, std::size_t to) const { return rows_[from].test(to); }
  void set(std::size_t from, std::size_t to, bool value = true) { rows_[from].set(to, value); }

  const StateSet& row(std::size_t from) const { return rows_[from]; }
  StateSet& row(std::size_t from) { return rows_[from]; }

  // Successors of a set of states.
  StateSet post(const StateSet& from) const;
  bool none() const;
  std::size_t count() const;

  BoolRelation& operator|=(const BoolRelation& other);
  friend BoolRelation operator*(const BoolRelation& lhs, const BoolRelation& rhs);
  friend bool operator==(const BoolRelation& lhs, const BoolRelation& rhs) { return lhs.rows_ == rhs.rows_; }

  // Deterministic 64-bit hash of the set bits.
  std::uint64_t fingerprint() const;

 private:
  std::vector<StateSet> rows_;
};

std::uint64_t mix_hash(std::uint64_t seed, std::uint64_t value);

}  // namespace omegasub
