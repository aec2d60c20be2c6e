#pragma once

#include <cstddef>
#include <cstdint>

namespace fincat {

// Hard limits on the exhaustive searches. Exceeding a cap raises an Error;
// results are never silently truncated. The defaults are also the defaults
// of the command line flags.
struct Caps {
  // largest ground set the partition-enumeration universality oracle accepts
  std::size_t max_partition = 10;
  // largest number of candidate component tuples enumerate_nat_trans (and the
  // matching-family odometer) will walk
  std::uint64_t max_nat_trans = 10'000'000;
  // largest number of morphisms into one object when enumerating sieves
  std::size_t max_sieve_morphisms = 20;
  // largest morphism count a category builder (free category, poset,
  // delooping) may produce
  std::size_t max_category_morphisms = 10'000;
};

}  // namespace fincat
