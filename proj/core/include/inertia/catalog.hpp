#pragma once

#include <vector>

#include "inertia/bipartite.hpp"

namespace inertia {

/// How an inertia triple relates to the catalog of attainable partial
/// transpose inertias N_{m,n} of NPT states.
enum class Membership {
    member,    // realizable, listed
    excluded,  // ruled out (curated list, completeness, or the EW bound i_+ >= 3)
    not_npt,   // neg == 0: the matrix would be PPT, outside N_{m,n} by definition
    unknown,   // catalog incomplete and the triple is not classified
};

struct CatalogEntry {
    BipartiteDims dims;
    std::vector<Inertia> known_members;   // sorted
    std::vector<Inertia> known_excluded;  // sorted, curated headline exclusions
    std::vector<Inertia> family;          // the N_{3,n} family rows when dim_a == 3
    bool complete = false;

    Membership classify(const Inertia& in) const;
    bool is_member(const Inertia& in) const;
    bool is_excluded(const Inertia& in) const;
};

/// The (n-1)(2n-1) arrays (k, 3n-2-2k-j, j+k+2) for 1 <= k <= n-1,
/// 0 <= j <= 3n-2-2k, each summing to 3n.
std::vector<Inertia> family_inertias(std::size_t n);

/// Curated data for dims (2,3), (3,3) and (3,4); for other dims with
/// dim_a == 3 only the family rows are returned and the entry is incomplete.
CatalogEntry known_catalog(BipartiteDims dims);

}  // namespace inertia
