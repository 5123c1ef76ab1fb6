#ifndef LMONOID_CAPS_HPP
#define LMONOID_CAPS_HPP

#include <cstddef>

// Default and hard limits for every exhaustive search. Operations take a cap
// argument defaulting to the first constant; the CLI lets users raise it up
// to the hard maximum.
namespace lmonoid::caps {

  // Valuations visited by satisfies() / failure_witness().
  inline constexpr std::size_t evaluation         = 100'000'000;
  inline constexpr std::size_t evaluation_max     = 10'000'000'000;
  // Word size for enumerate_words().
  inline constexpr std::size_t enumeration        = 14;
  inline constexpr std::size_t enumeration_max    = 20;
  // Algebra size for brute_force_enumerate().
  inline constexpr std::size_t brute_force        = 6;
  inline constexpr std::size_t brute_force_max    = 7;
  // Algebra size for congruence-based operations (interval partitions).
  inline constexpr std::size_t congruence         = 20;
  inline constexpr std::size_t congruence_max     = 24;
  // Algebra size for has_cep().
  inline constexpr std::size_t cep                = 12;
  inline constexpr std::size_t cep_max            = 14;
  // Result word size for search_amalgam().
  inline constexpr std::size_t amalgam_search     = 8;
  inline constexpr std::size_t amalgam_search_max = 10;
  // Maps enumerated by one_sided_amalgam_search() per candidate target.
  inline constexpr std::size_t map_search         = 10'000'000;
  inline constexpr std::size_t map_search_max     = 1'000'000'000;
  // Index n for count_I / count_S / count_comm (64-bit exact).
  inline constexpr std::size_t counting           = 40;

}  // namespace lmonoid::caps

#endif  // LMONOID_CAPS_HPP
