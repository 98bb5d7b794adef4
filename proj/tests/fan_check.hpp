#pragma once

#include <algorithm>
#include <string>

#include "fblow/fan.hpp"
#include "oracles.hpp"

namespace oracle {

/// Compares a computed planar fan with the dense sweep: chamber count,
/// standard sets in order, outer rays, each wall strictly between the
/// neighbouring samples, and `samples` interior re-checks per chamber.
/// Returns an empty string on agreement, otherwise the first mismatch.
inline std::string compare_with_sweep(const fblow::AffineMonoid& A, fblow::Int q, const fblow::ChamberFan& fan,
                                      int samples, Int density = 240) {
  using fblow::Chamber;
  using fblow::LatticeVector;
  const auto gens = gens_of(A);
  const Sweep sweep = dense_sweep(gens, q, density);
  if (!fan.certified) return "fan is not certified";
  if (fan.chambers.size() != sweep.groups.size())
    return "chamber count " + std::to_string(fan.chambers.size()) + " vs sweep " + std::to_string(sweep.groups.size());

  std::vector<const Chamber*> chambers;
  for (const auto& ch : fan.chambers) chambers.push_back(&ch);
  const Int s = cross(sweep.left_ray, sweep.right_ray) > 0 ? 1 : -1;
  std::sort(chambers.begin(), chambers.end(), [&](const Chamber* a, const Chamber* b) {
    return s * cross(a->sample.covector.coords(), b->sample.covector.coords()) > 0;
  });
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    const auto tag = "chamber " + std::to_string(i) + ": ";
    if (chambers[i]->standard.elements() != to_lattice(sweep.groups[i].standard)) return tag + "standard set differs";
    if (!chambers[i]->cone.strictly_contains(LatticeVector(sweep.groups[i].first)) ||
        !chambers[i]->cone.strictly_contains(LatticeVector(sweep.groups[i].last)))
      return tag + "sweep samples fall outside the cone";
    auto interior = fblow::interior_samples(*chambers[i], samples);
    if (static_cast<int>(interior.size()) != samples) return tag + "too few interior samples";
    for (const auto& w : interior) {
      if (!chambers[i]->cone.strictly_contains(w.covector)) return tag + "sample outside cone";
      auto expected = standard_set(gens, q, w.covector.coords());
      if (!expected || to_lattice(*expected) != chambers[i]->standard.elements())
        return tag + "re-verification failed at " + fblow::to_string(w.covector);
    }
  }
  std::vector<LatticeVector> outer;
  for (const auto* ch : {chambers.front(), chambers.back()})
    for (const auto& r : ch->cone.rays) outer.push_back(r);
  for (const auto& ray : {sweep.left_ray, sweep.right_ray})
    if (std::find(outer.begin(), outer.end(), LatticeVector(ray)) == outer.end()) return "outer ray missing";
  for (std::size_t i = 0; i + 1 < chambers.size(); ++i) {
    std::vector<LatticeVector> shared;
    for (const auto& r : chambers[i]->cone.rays)
      if (std::find(chambers[i + 1]->cone.rays.begin(), chambers[i + 1]->cone.rays.end(), r) !=
          chambers[i + 1]->cone.rays.end())
        shared.push_back(r);
    if (shared.size() != 1) return "wall " + std::to_string(i) + " not shared";
    const auto& wall = shared.front().coords();
    if (s * cross(sweep.groups[i].last, wall) <= 0 || s * cross(wall, sweep.groups[i + 1].first) <= 0)
      return "wall " + std::to_string(i) + " not between sweep samples";
  }
  return {};
}

}  // namespace oracle
