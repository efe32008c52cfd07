#pragma once

// Exhaustive and randomized generators for constellations, complete ideals and
// monomial staircases. Used by the property suites and the CLI corpus check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cideal/monomial.hpp"
#include "cideal/point_basis.hpp"

namespace cideal {

/// Isomorphism-invariant encoding of a constellation (children unordered).
std::string canonical_form(const Constellation& c);

/// Every constellation with 1..max_points points and all degrees 1, one per
/// isomorphism class, in order of increasing size.
std::vector<ConstellationPtr> enumerate_constellations(std::size_t max_points);

/// Complete ideals on `c` with every entry in [1, max_entry] (full support) or
/// in [0, max_entry] (any support, unit ideal excluded).
std::vector<IdealClass> enumerate_complete_ideals(const ConstellationPtr& c, std::int64_t max_entry,
                                                  bool full_support_only = true);

/// Calls f(v) for every vector in {0..max_entry}^n, lexicographically.
template <typename F>
void for_each_box_vector(std::size_t n, std::int64_t max_entry, F&& f) {
  std::vector<std::int64_t> v(n, 0);
  while (true) {
    f(static_cast<const std::vector<std::int64_t>&>(v));
    std::size_t i = n;
    while (i > 0 && v[i - 1] == max_entry) v[--i] = 0;
    if (i == 0) return;
    ++v[i - 1];
  }
}

/// Integrally closed m-primary staircases whose Newton polygon has all
/// vertices in [0, bound]^2.
std::vector<Staircase> monomial_corpus(std::int64_t bound = 8);

/// Random constellation with `n` points; each edge has degree 1, or with
/// probability 1/4 a degree in [2, max_degree].
Constellation random_constellation(std::mt19937_64& rng, std::size_t n, std::int64_t max_degree = 2);

/// Random complete ideal with excesses in [0, max_excess], not the unit ideal.
IdealClass random_ideal(std::mt19937_64& rng, const ConstellationPtr& c, std::int64_t max_excess = 2);

}  // namespace cideal
