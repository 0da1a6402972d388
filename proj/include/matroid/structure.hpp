#pragma once

#include <optional>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroidlab {

// Connectivity value lambda(A) = r(A) + r(E-A) - r(E).
int lambda(const Matroid& m, Mask a);

bool is_connected(const Matroid& m);
// Tutte 3-connectivity: connected with no 2-separation. The scan over sides
// is exhaustive.
bool is_three_connected(const Matroid& m);

struct Separation {
    Mask side;
    int lambda_value;
    int k;
};

// All k-separations, one per complementary pair (the reported side contains
// element 0), sorted by side mask.
std::vector<Separation> find_separations(const Matroid& m, int k);

// For a simple, cosimple, connected matroid and a 2-separation (A, E-A),
// returns the 2-separation (fcl(A), E - fcl(A)).
Separation normalize_two_separation(const Matroid& m, Mask a);

// Ordered element sequence whose consecutive triples alternate between
// triangles and triads.
struct Fan {
    std::vector<int> seq;
    bool first_is_triangle = true;

    Mask support() const { return indices_to_mask(seq); }
};

bool is_fan(const Matroid& m, const std::vector<int>& seq);
// All maximal fans up to reversal (maximal: the support is contained in no
// longer fan's support), sorted by sequence.
std::vector<Fan> find_fans(const Matroid& m);
// All fans of an exact length up to reversal.
std::vector<Fan> find_fans_of_length(const Matroid& m, int len);

enum class FanElement { rim, spoke };
// Rim/spoke classification of the fan elements: an interior element is a rim
// element when it lies in exactly one triangle inside the fan's support, an
// end element when it lies in none.
std::vector<FanElement> classify_fan(const Matroid& m, const Fan& f);
bool is_maximal_fan(const Matroid& m, const Fan& f);

// Given a fan and a 2-separation of a simple cosimple connected matroid,
// produces a 2-separation whose reported side contains the whole fan: take
// the side meeting the first window in at least two elements and close it
// fully.
Separation cover_fan_by_separation(const Matroid& m, const Fan& f, Mask a);

// Bijection between ground sets, stored as images of A's indices in B.
struct IsoMap {
    std::vector<int> image;

    IsoMap inverse() const;
    IsoMap compose_after(const IsoMap& first) const;  // this(first(x))
};

// Exhaustive rank-preservation check of a candidate map.
bool verify_map(const Matroid& a, const Matroid& b, const IsoMap& phi);
std::optional<IsoMap> isomorphism(const Matroid& a, const Matroid& b);
// The lexicographically least isomorphism (domain in ground order, images
// compared by index), or nothing.
std::optional<IsoMap> least_isomorphism(const Matroid& a, const Matroid& b);
// All automorphisms, sorted lexicographically. Guarded: |E| <= 10.
std::vector<IsoMap> automorphisms(const Matroid& m);

// Orbits of {0..n-1} under a set of permutations, each orbit sorted, orbits
// sorted by least member.
std::vector<std::vector<int>> orbits(int n, const std::vector<IsoMap>& maps);
bool is_transitive_on(const std::vector<IsoMap>& maps, const std::vector<int>& elems);

// Certificate that pattern N is isomorphic to host/C\D; iso maps E(N) into
// the minor's ground set.
struct MinorWitness {
    Mask contract_set;
    Mask delete_set;
    IsoMap iso;
};

// Exhaustive minor search: contract sets run over independent sets of size
// r(host)-r(pattern) in lexicographic order, delete sets likewise, with
// completeness-preserving pruning (loops forced into the delete set and
// parallel classes canonicalized to their representative when the pattern is
// simple). The first witness found is the canonical one; its iso map is the
// least isomorphism.
std::optional<MinorWitness> has_minor(const Matroid& host, const Matroid& pattern);
// Every (C, D) pair through which the pattern embeds (same search space as
// has_minor but without stopping, no pruning of parallel choices).
std::vector<std::pair<Mask, Mask>> minor_embeddings(const Matroid& host, const Matroid& pattern);

struct ExClassReport {
    bool in_class;
    std::vector<std::optional<MinorWitness>> witnesses;  // parallel to patterns
};

ExClassReport in_ex_class(const Matroid& m, const std::vector<Matroid>& patterns);

}  // namespace matroidlab
