#pragma once
#include <cstdint>
#include <string>

namespace pants {

// Runtime limits; tune with a key=value file pointed at by PANTS_CONFIG
// or with CLI flags.  Defaults keep everything well inside a laptop budget.
struct Config {
  int max_n = 6;              // hard cap on n anywhere (partition/subset level)
  int net_enum_max_n = 4;     // full net enumeration over all partitions
  int lattice_max_n = 5;      // lattice-only work: cell posets, label scans
  int piece_poset_max_n = 3;  // materialized piece posets / their homology
  std::size_t snf_nonzero_guard = 200000;  // max nonzeros fed to dense SNF
  int collapse_retries = 32;  // randomized restarts after the greedy collapse
  std::uint64_t seed = 0;     // base RNG seed for sampling checks
  std::string output_format = "json";  // json | dot | text

  // Throws argument_error if anything is nonsensical (negative caps, ...).
  void validate() const;

  // Parse a key=value file (# comments, blank lines ok).  Unknown keys throw.
  static Config load_file(const std::string& path);

  // Config from the file named by PANTS_CONFIG if set, otherwise defaults.
  static Config from_env();
};

}  // namespace pants
