#include "bsdh/rigidity.hpp"

namespace bsdh {

RigidityFlags rigidity_report(const Word& w, bool condition_i_holds) {
  RigidityFlags flags;
  flags.coxeter_type = is_coxeter_type(w);
  flags.toric = flags.coxeter_type;
  flags.cohomology_vanishing = flags.coxeter_type && condition_i_holds;
  flags.locally_rigid = flags.cohomology_vanishing;
  return flags;
}

}  // namespace bsdh
