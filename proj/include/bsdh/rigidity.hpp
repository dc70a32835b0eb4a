#pragma once

#include "bsdh/weyl.hpp"

namespace bsdh {

// Geometric consequences read off a word. Each flag entails the next is
// meaningful: toricity needs pairwise-distinct letters, the vanishing of
// higher tangent cohomology additionally needs the strongest positivity
// condition on the pairing matrix, and local rigidity follows from that
// vanishing.
struct RigidityFlags {
  bool coxeter_type = false;
  bool toric = false;
  bool cohomology_vanishing = false;
  bool locally_rigid = false;
};

RigidityFlags rigidity_report(const Word& w, bool condition_i_holds);

}  // namespace bsdh
