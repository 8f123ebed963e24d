#pragma once

#include <vector>

#include "semifree/lattice.hpp"

namespace semifree {

struct SplitPart {
    CohClass cls;
    Int genus = 0;

    auto operator<=>(const SplitPart&) const = default;
};

// connected components of a fixed surface; parts sorted
struct Splitting {
    std::vector<SplitPart> parts;

    auto operator<=>(const Splitting&) const = default;
};

// Decompositions of total into pairwise orthogonal classes of positive area, each
// realizable by a connected embedded symplectic surface. Sorted, duplicate free.
std::vector<Splitting> enumerate_splittings(const CohClass& total, const CohClass& area_form);

// single-part admissibility used by enumerate_splittings
bool admissible_part(const CohClass& c, const CohClass& area_form);

} // namespace semifree
