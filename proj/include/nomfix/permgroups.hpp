#pragma once

#include <cstddef>
#include <vector>

#include "nomfix/terms.hpp"

namespace nomfix {

inline constexpr std::size_t kDefaultCarrierBound = 8;

// ds(π, π') = {a | π(a) ≠ π'(a)}
AtomSet ds(const Perm& pi, const Perm& rho);

// True iff π fixes every atom of `atoms`.
bool fixes_pointwise(const Perm& pi, const AtomSet& atoms);

/// A finite set of generators and the atoms they move.
class GenSet {
  public:
    explicit GenSet(std::vector<Perm> generators, std::size_t carrier_bound = kDefaultCarrierBound);

    const std::vector<Perm>& generators() const { return generators_; }
    const AtomSet& carrier() const { return carrier_; }
    std::size_t carrier_bound() const { return bound_; }

  private:
    std::vector<Perm> generators_;
    AtomSet carrier_;
    std::size_t bound_;
};

/// Every element of the generated group, by breadth-first closure.
/// Throws CarrierBoundExceeded when the carrier exceeds the bound.
std::vector<Perm> enumerate_group(const GenSet& gens);

/// π ∈ ⟨gens⟩.
///
/// Generators whose domains are linked (directly or through other
/// generators) form one orbit component. Generators of different
/// components commute and act on disjoint atoms, so the group is the
/// direct product of the component groups: π is a member iff it maps
/// each component onto itself and its restriction to each component is
/// generated there. Only components touched by π are enumerated, and the
/// carrier bound applies per component.
bool group_member(const Perm& pi, const GenSet& gens);

}  // namespace nomfix
