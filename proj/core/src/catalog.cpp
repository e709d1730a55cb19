#include "inertia/catalog.hpp"

#include <algorithm>

namespace inertia {

namespace {

std::vector<Inertia> sorted(std::vector<Inertia> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool contains(const std::vector<Inertia>& v, const Inertia& in) {
    return std::binary_search(v.begin(), v.end(), in);
}

}  // namespace

Membership CatalogEntry::classify(const Inertia& in) const {
    if (in.neg == 0) return Membership::not_npt;
    if (contains(known_members, in)) return Membership::member;
    if (contains(known_excluded, in)) return Membership::excluded;
    if (in.pos < 3) return Membership::excluded;  // an EW has at least three positive eigenvalues
    if (complete) return Membership::excluded;
    return Membership::unknown;
}

bool CatalogEntry::is_member(const Inertia& in) const {
    return classify(in) == Membership::member;
}

bool CatalogEntry::is_excluded(const Inertia& in) const {
    return classify(in) == Membership::excluded;
}

std::vector<Inertia> family_inertias(std::size_t n) {
    std::vector<Inertia> out;
    if (n < 2) return out;
    for (std::size_t k = 1; k + 1 <= n; ++k) {
        const std::size_t top = 3 * n - 2 - 2 * k;
        for (std::size_t j = 0; j <= top; ++j) out.push_back(Inertia{k, top - j, j + k + 2});
    }
    return sorted(out);
}

CatalogEntry known_catalog(BipartiteDims dims) {
    CatalogEntry e;
    e.dims = dims;
    if (dims.dim_a == 3) e.family = family_inertias(dims.dim_b);

    if (dims.dim_a == 2 && dims.dim_b == 3) {
        e.known_members = sorted({{1, 2, 3}, {1, 1, 4}, {1, 0, 5}, {2, 0, 4}});
        e.complete = true;
    } else if (dims.dim_a == 3 && dims.dim_b == 3) {
        e.known_members = sorted({{1, 0, 8},
                                  {1, 1, 7},
                                  {1, 2, 6},
                                  {1, 3, 5},
                                  {1, 4, 4},
                                  {1, 5, 3},
                                  {2, 0, 7},
                                  {2, 1, 6},
                                  {2, 2, 5},
                                  {2, 3, 4},
                                  {3, 0, 6},
                                  {3, 1, 5},
                                  {4, 0, 5}});
        e.known_excluded = sorted({{4, 1, 4}, {3, 2, 4}});
        e.complete = true;
    } else if (dims.dim_a == 3 && dims.dim_b == 4) {
        e.known_members = e.family;
        e.known_excluded = sorted({{7, 0, 5},
                                   {7, 1, 4},
                                   {7, 2, 3},
                                   {8, 0, 4},
                                   {8, 1, 3},
                                   {9, 0, 3},
                                   {6, 2, 4},
                                   {6, 3, 3},
                                   {5, 4, 3}});
        e.complete = false;
    } else if (dims.dim_a == 3) {
        e.known_members = e.family;
        e.complete = false;
    }
    return e;
}

}  // namespace inertia
