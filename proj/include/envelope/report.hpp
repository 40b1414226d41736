#pragma once

#include <optional>
#include <string>
#include <vector>

#include "envelope/linalg.hpp"

namespace envelope {

struct BettiEntry {
  int weight = 0;
  std::optional<int> internal_degree;  // set only when the input is graded
  std::size_t chain_dim = 0;
  std::size_t rank_in = 0;   // rank of the differential arriving in this slot
  std::size_t rank_out = 0;  // rank of the differential leaving it
  std::size_t homology = 0;
  bool asserted = true;      // false for slots the truncation cuts into
  std::string note;
};

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct BettiReport {
  std::string theory;
  std::string direction;
  std::string input;
  std::vector<BettiEntry> entries;
  std::vector<Check> checks;

  bool all_passed() const;
  void check(const std::string& name, bool passed, const std::string& detail = {});
  // Betti numbers by weight, summed over internal degrees.
  std::vector<std::size_t> betti() const;

  std::string to_json() const;  // pretty-printed, deterministic
  std::string to_table() const;
};

// One weight of a complex. d_out leaves the slot, d_in arrives in it; degree tags are the
// internal degrees of the slot's basis (empty when ungraded). With tags, the slot is split
// by internal degree: both maps are homogeneous, so ranks can be taken on the pieces.
std::vector<BettiEntry> betti_entries(int weight, const SparseMap& d_out, const SparseMap& d_in,
                                      const std::vector<int>& tags = {});

}  // namespace envelope
