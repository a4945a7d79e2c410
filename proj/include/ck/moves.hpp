#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ck/diagram.hpp"
#include "ck/labeling.hpp"

namespace ck {

// presentation changes: ids, list rotations, taut re-basing
struct MvRename {
  std::string what;  // "component", "upper", "lower", "region"
  std::string from, to;
};
struct MvRenamePoint {
  PointId from, to;
};
struct MvRotateUpper {
  CircleId upper;
  int steps;
};
struct MvRotateTaut {
  RegionId region;
  int steps;
};
struct MvRebaseTaut {
  RegionId region;
  ComponentId new_base;
  Word w;  // path from new_base to the current base
};

// basepoint of a lower circle moves past `steps` of its points
struct MvBasepoint {
  CircleId lower;
  int steps = 1;
};

struct MvReverseUpper {
  CircleId upper;
};
struct MvReverseLower {
  CircleId lower;
};

// finger of `lower` poked across `upper`, adding a canceling pair
struct MvTwoPoint {
  CircleId upper;
  CircleId lower;
  int pos_l;
  int pos_u;
  int first_sign;
  PointId id_first, id_second;
};

struct MvStabilize {
  RegionId region;
  int insert_pos;
  Word r;  // path from the region's base to the new handle
  int e;   // E element coloring the new lower circle
  CircleId new_upper, new_lower;
  PointId new_point;
};
struct MvDestabilize {
  CircleId upper, lower;
};

// u1 slides over u2 across their shared cminus component
struct MvSlideUpper {
  CircleId u1, u2;
  int band_pos;  // index into u2's list where the copy block starts
  std::vector<PointId> new_points;
};

// l1 slides over l2; the band sits just before both basepoints
struct MvSlideLower {
  CircleId l1, l2;
  std::vector<PointId> new_points;
};

struct MvTrivialUpper {
  ComponentId host;
  bool host_is_cminus;
  int x;  // arbitrary H label for the new circle
  CircleId new_upper;
  ComponentId new_component;
};
struct MvRemoveTrivialUpper {
  CircleId upper;
};
struct MvTrivialLower {
  RegionId host_region;
  int insert_pos;
  Word r;
  int eps;
  CircleId new_lower;
  RegionId new_region;
};
struct MvRemoveTrivialLower {
  CircleId lower;
};

using MoveDescriptor =
    std::variant<MvRename, MvRenamePoint, MvRotateUpper, MvRotateTaut, MvRebaseTaut,
                 MvBasepoint, MvReverseUpper, MvReverseLower, MvTwoPoint, MvStabilize,
                 MvDestabilize, MvSlideUpper, MvSlideLower, MvTrivialUpper,
                 MvRemoveTrivialUpper, MvTrivialLower, MvRemoveTrivialLower>;

std::string move_name(const MoveDescriptor& mv);

// fails with PreconditionViolated when the move does not apply; the result
// always passes validate and check_labeling
std::pair<HeegaardDiagram, ChiLabeling> apply_move(const HeegaardDiagram& dia,
                                                   const ChiLabeling& lab,
                                                   const CrossedModule& cm,
                                                   const MoveDescriptor& mv);

}  // namespace ck
