#pragma once

// Seeded generator of random valid mating schemas. Families:
//   cactus    trees of holes wedged at S-fixed corners, several clusters side by side
//   pinched   a Case I hole with two opposite fixed corners pinched, extra holes enclosed
//   facing    two holes of the same type with every corner identified
// Blaschke slots are sprinkled in; they carry no hole.

#include <random>
#include <string>
#include <vector>

#include "weldlab/mating_schema.hpp"

namespace sweep {

using weldlab::CornerRef;
using weldlab::MatingSchema;
using weldlab::PairingCase;
using weldlab::SideRef;
using weldlab::Slot;

inline Slot random_group(std::mt19937& rng, bool need_fixed_corner) {
  std::uniform_int_distribution<int> nd(1, 4);
  std::uniform_int_distribution<int> pd(1, 6);
  for (;;) {
    const int n = nd(rng);
    const int p = pd(rng);
    if (n * p < 3) continue;
    PairingCase c = PairingCase::CaseI;
    if (!need_fixed_corner && p % 2 == 0 && rng() % 2 == 0) c = PairingCase::CaseII;
    return Slot::group(n, p, c);
  }
}

inline std::vector<int> fixed_corners(const Slot& s) {
  if (s.pairing == PairingCase::CaseII) return {};
  if (s.p % 2 == 0) return {0, s.p / 2};
  return {0};
}

inline void add_blaschke(std::mt19937& rng, MatingSchema& schema) {
  const int count = static_cast<int>(rng() % 3);
  for (int i = 0; i < count; ++i) schema.slots.push_back(Slot::blaschke(2 + static_cast<int>(rng() % 3)));
}

// One cactus; every cluster built this way has a single boundary walk.
inline void add_cactus(std::mt19937& rng, MatingSchema& schema, int holes) {
  const int root = static_cast<int>(schema.slots.size());
  schema.slots.push_back(random_group(rng, false));
  std::vector<CornerRef> free_fixed;
  for (int k : fixed_corners(schema.slots[root])) free_fixed.push_back({root, k});
  std::vector<std::size_t> points;  // indices into contact.classes made by this cactus

  for (int h = 1; h < holes; ++h) {
    const int slot = static_cast<int>(schema.slots.size());
    schema.slots.push_back(random_group(rng, true));
    const std::vector<int> own = fixed_corners(schema.slots[slot]);
    const int use = own[rng() % own.size()];
    const std::size_t options = free_fixed.size() + points.size();
    if (options == 0) {
      // nothing to attach to: start a separate cluster
      for (int k : own) free_fixed.push_back({slot, k});
      continue;
    }
    const std::size_t pick = rng() % options;
    if (pick < free_fixed.size()) {
      schema.contact.classes.push_back({free_fixed[pick], {slot, use}});
      free_fixed.erase(free_fixed.begin() + static_cast<long>(pick));
      points.push_back(schema.contact.classes.size() - 1);
    } else {
      auto& cls = schema.contact.classes[points[pick - free_fixed.size()]];
      cls.insert(cls.begin() + static_cast<long>(rng() % (cls.size() + 1)), CornerRef{slot, use});
    }
    for (int k : own) {
      if (k != use) free_fixed.push_back({slot, k});
    }
  }
}

inline MatingSchema cactus_schema(std::mt19937& rng) {
  MatingSchema schema;
  schema.name = "cactus";
  const int clusters = 1 + static_cast<int>(rng() % 3);
  for (int c = 0; c < clusters; ++c) add_cactus(rng, schema, 1 + static_cast<int>(rng() % 4));
  add_blaschke(rng, schema);
  return schema;
}

inline MatingSchema pinched_schema(std::mt19937& rng) {
  MatingSchema schema;
  schema.name = "pinched";
  std::uniform_int_distribution<int> nd(1, 3);
  const int p = 2 * (1 + static_cast<int>(rng() % 3));
  int n = nd(rng);
  if (n * p < 3) n = 2;
  schema.slots.push_back(Slot::group(n, p, PairingCase::CaseI));
  schema.contact.classes.push_back({{0, 0}, {0, p / 2}});
  const int extra = static_cast<int>(rng() % 3);
  for (int e = 0; e < extra; ++e) {
    const int slot = static_cast<int>(schema.slots.size());
    schema.slots.push_back(random_group(rng, false));
    const int side = 1 + static_cast<int>(rng() % p);
    schema.contact.enclosures.push_back({SideRef{0, side}, SideRef{slot, 1}});
  }
  add_blaschke(rng, schema);
  return schema;
}

inline MatingSchema facing_schema(std::mt19937& rng) {
  MatingSchema schema;
  schema.name = "facing";
  const bool case_two = rng() % 2 == 0;
  const int p = case_two ? 2 * (1 + static_cast<int>(rng() % 3)) : 2 + static_cast<int>(rng() % 5);
  int n = 1 + static_cast<int>(rng() % 3);
  if (case_two && p == 2 && n == 1) n = 2;
  if (n * p < 3) n = 2;
  const PairingCase c = case_two ? PairingCase::CaseII : PairingCase::CaseI;
  schema.slots.push_back(Slot::group(n, p, c));
  schema.slots.push_back(Slot::group(1 + static_cast<int>(rng() % 3), p, c));
  if (schema.slots[1].n * p < 3) schema.slots[1].n = 2;
  // corner k faces corner shift - k, with the shift chosen so the classes are S-invariant
  int shift = case_two ? 1 : 0;
  if (p % 2 == 0 && rng() % 2 == 0) shift += p / 2;
  for (int k = 0; k < p; ++k) schema.contact.classes.push_back({{0, k}, {1, ((shift - k) % p + p) % p}});
  if (rng() % 2 == 0) {
    const int slot = static_cast<int>(schema.slots.size());
    schema.slots.push_back(random_group(rng, false));
    schema.contact.enclosures.push_back({SideRef{0, 1 + static_cast<int>(rng() % p)}, SideRef{slot, 1}});
  }
  add_blaschke(rng, schema);
  return schema;
}

inline std::vector<MatingSchema> random_schemas(unsigned seed = 20240611, int count = 120) {
  std::mt19937 rng(seed);
  std::vector<MatingSchema> out;
  for (int i = 0; i < count; ++i) {
    MatingSchema s;
    switch (i % 3) {
      case 0: s = cactus_schema(rng); break;
      case 1: s = pinched_schema(rng); break;
      default: s = facing_schema(rng); break;
    }
    s.name += "-" + std::to_string(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace sweep
