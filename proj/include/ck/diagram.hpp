#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ck/error.hpp"

namespace ck {

using CircleId = std::string;
using ComponentId = std::string;
using RegionId = std::string;
using PointId = int;

// a crossing of an upper circle, read with exponent sign
struct Letter {
  CircleId upper;
  int sign;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct UpperPoint {
  PointId id;
  CircleId lower;
  int sign;
  bool operator==(const UpperPoint&) const = default;
};

struct UpperCircle {
  CircleId id;
  ComponentId cminus;
  ComponentId cplus;
  std::vector<UpperPoint> points;  // cyclic order from the basepoint
};

struct LowerCircle {
  CircleId id;
  ComponentId base_component;
  std::vector<PointId> points;  // cyclic order from the basepoint
};

struct TautFactor {
  Word r;  // path from the region's base component to the lower's base
  CircleId lower;
  int eps;  // +1 or -1
  bool operator==(const TautFactor&) const = default;
};

struct TautIdentity {
  RegionId region;
  ComponentId base_component;
  std::vector<TautFactor> factors;
};

struct HeegaardDiagram {
  int genus = 0;
  std::vector<ComponentId> components;
  std::vector<UpperCircle> uppers;
  std::vector<LowerCircle> lowers;
  std::vector<TautIdentity> tauts;

  const UpperCircle& upper(const CircleId& id) const;
  const LowerCircle& lower(const CircleId& id) const;
  const TautIdentity& taut(const RegionId& id) const;
  UpperCircle* find_upper(const CircleId& id);
  LowerCircle* find_lower(const CircleId& id);
  TautIdentity* find_taut(const RegionId& id);
  bool has_component(const ComponentId& id) const;
  // (owning upper, point record); fails on unknown ids
  std::pair<const UpperCircle*, const UpperPoint*> locate_point(PointId id) const;
};

Word inverse_word(const Word& w);
Word reduce(Word w);
Word omega(const HeegaardDiagram& d, const CircleId& l);

// follows the word across components; fails with IllTypedWord
ComponentId walk(const HeegaardDiagram& d, const ComponentId& from, const Word& w);

std::vector<std::string> validate(const HeegaardDiagram& d);

HeegaardDiagram build_lens(int p, int q);
HeegaardDiagram build_poincare();
HeegaardDiagram build_s3();

struct ConnectedSum {
  HeegaardDiagram diagram;
  // where each id of the second summand ended up
  std::map<ComponentId, ComponentId> components;
  std::map<CircleId, CircleId> uppers;
  std::map<CircleId, CircleId> lowers;
  std::map<PointId, PointId> points;
  std::map<RegionId, RegionId> regions;
};

ConnectedSum connected_sum(const HeegaardDiagram& d1, const HeegaardDiagram& d2,
                           const ComponentId& c1, const ComponentId& c2,
                           const RegionId& r1, const RegionId& r2);

// mirror of the underlying surface: every crossing sign flips, upper sides
// swap, taut factors reverse with flipped eps and sign-flipped r-words
HeegaardDiagram reverse_orientation(const HeegaardDiagram& d);

// structure-preserving bijection of ids; taut r-words are compared modulo
// right multiplication by a power of the lower circle's omega
bool isomorphic(const HeegaardDiagram& a, const HeegaardDiagram& b);

// renames require a fresh target id
void rename_component(HeegaardDiagram& d, const ComponentId& from, const ComponentId& to);
void rename_upper(HeegaardDiagram& d, const CircleId& from, const CircleId& to);
void rename_lower(HeegaardDiagram& d, const CircleId& from, const CircleId& to);
void rename_point(HeegaardDiagram& d, PointId from, PointId to);
void rename_region(HeegaardDiagram& d, const RegionId& from, const RegionId& to);

}  // namespace ck
