#pragma once

#include <map>
#include <string>
#include <vector>

namespace csym {

// A composition is a finite sequence of positive integers; a partition is
// a weakly decreasing one. Both render "(2,1)" and the empty one "()".
using Composition = std::vector<int>;
using Partition = std::vector<int>;

int comp_size(const Composition& c);  // |alpha|, the sum of the parts
std::string comp_text(const Composition& c);
Composition comp_parse(std::string_view text);

bool is_partition(const Composition& c);
Partition sort_composition(const Composition& c);
// Conjugate (transpose) partition.
Partition conjugate(const Partition& p);

// alpha refines beta: beta is obtained by summing adjacent runs of alpha.
bool comp_refines(const Composition& alpha, const Composition& beta);
std::vector<Composition> comp_refinements(const Composition& alpha);
std::vector<Composition> comp_coarsenings(const Composition& alpha);

Composition comp_concat(const Composition& a, const Composition& b);
// Near concatenation: last part of a merges with first part of b.
Composition comp_near_concat(const Composition& a, const Composition& b);
Composition comp_reversal(const Composition& a);

// Quasishuffle of compositions, with multiplicity.
std::map<Composition, long> comp_quasishuffle(const Composition& a, const Composition& b);

// Number of pairs of weak compositions (alpha, beta) of length l(nu) with
// positive parts sorting to lambda resp. mu and alpha_i + beta_i = nu_i.
long comp_r_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// All compositions of n, by length then lexicographic order; n = 0 gives
// the single empty composition.
std::vector<Composition> compositions_of(int n);
// All partitions of n in descending lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

// All distinct rearrangements of a partition's parts.
std::vector<Composition> comp_rearrangements(const Partition& p);

}  // namespace csym
