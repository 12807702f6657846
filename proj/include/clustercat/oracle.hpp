#pragma once

// Brute-force checks over finite windows. Only the surface and homext
// primitives are shared with the code under test.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "clustercat/surface.hpp"

namespace clustercat {

class FanTriangulation;

/// All valid arcs with both endpoints in the window, in canonical order.
std::vector<Arc> enumerate_arcs(const ModelParams& params, const Window& window);

struct OracleRecord {
  std::string check;
  bool pass = true;
  std::string detail;
};

struct OracleReport {
  std::string name;
  std::uint64_t seed = 0;
  Window window;
  std::vector<OracleRecord> records;
  std::map<std::string, std::int64_t> counters;
  /// Passed on the window but failed on the window enlarged by 2.
  bool alarm = false;

  bool pass() const;
  std::size_t failures() const;
  void record(std::string check, bool ok, std::string detail = {});
  void merge(const OracleReport& other);
  /// One JSON object per record.
  std::string json_lines() const;
  std::string summary() const;
};

/// (a) Every member W of X in the window with a nonzero map to C factors
/// through a summand of x0. (b) Dropping any summand breaks (a).
OracleReport verify_approximation(const FanTriangulation& x, const Arc& c, const Obj& x0, const Window& window);

/// Samples extension and approximation triangles on arcs inside Window(4).
/// Zero image vector implies zero defect, defects add over direct sums, and
/// suspension-translated pairs with equal image vectors have equal defects.
OracleReport verify_defect_invariance(const FanTriangulation& x, int sample_size, const Window& window,
                                      std::uint64_t seed);

/// For random rigid objects and random flips of X, the flip formula agrees
/// with the index recomputed in the flipped triangulation. Throws
/// NotRigidTriangulation.
OracleReport verify_mutation(const FanTriangulation& x, int flips, int sample_size, const Window& window,
                             std::uint64_t seed);

// Sampling helpers shared by the suites.

Arc random_arc(const ModelParams& params, const Window& window, std::mt19937_64& rng);

/// Arcs of X that can be flipped, among members with endpoints in the window.
std::vector<Arc> flippable_arcs(const FanTriangulation& x, const Window& window);

/// Up to `count` flips at random flippable arcs inside the window.
FanTriangulation random_flips(const FanTriangulation& x, int count, const Window& window, std::mt19937_64& rng);

/// A rigid object with between 1 and `max_summands` pairwise distinct
/// summands from the window, built greedily.
Obj random_rigid_object(const ModelParams& params, const Window& window, int max_summands, std::mt19937_64& rng);

}  // namespace clustercat
