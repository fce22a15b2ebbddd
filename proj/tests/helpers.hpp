#pragma once

#include <functional>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "pachner/complex.hpp"
#include "pachner/error.hpp"
#include "pachner/explore.hpp"
#include "pachner/generate.hpp"

namespace testing_support {

// The code of the pachner::Error thrown by fn; fails the test if none is.
inline pachner::ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const pachner::Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return pachner::ErrorCode::ParseError;
}

inline pachner::Complex cx(const std::vector<std::vector<pachner::Vertex>>& facets) {
  return pachner::Complex::from_facets(facets);
}

inline pachner::Simplex sx(std::initializer_list<pachner::Vertex> vs) { return pachner::Simplex(vs); }

inline std::vector<oracle::Set> to_sets(const pachner::Complex& c) {
  std::vector<oracle::Set> out;
  for (const auto& f : c.facets()) out.emplace_back(f.begin(), f.end());
  return out;
}

inline oracle::Set to_set(const pachner::Simplex& s) { return {s.begin(), s.end()}; }

inline oracle::Family to_family(const std::vector<pachner::Simplex>& ss) {
  oracle::Family out;
  for (const auto& s : ss) out.insert(to_set(s));
  return out;
}

// A small catalog of complexes with random perturbations, for property tests.
inline std::vector<pachner::Complex> sample_complexes(int d, std::size_t count, std::size_t steps,
                                                      std::size_t budget, std::uint64_t seed) {
  std::vector<pachner::Complex> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(pachner::random_walk(pachner::gen::sphere(d), steps, budget, seed + i).end);
  return out;
}

}  // namespace testing_support
