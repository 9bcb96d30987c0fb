#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "isg/action.hpp"
#include "isg/semigroup.hpp"
#include "isg/semilattice.hpp"

namespace isg {

/// Builtin constructors:
///   diamond_munn, semidirect_diamond, b2, symmetric:n, clifford_chain:identity|kill,
///   group:cyclic:n, brandt:n:m, graph:path:n, graph:parallel:k
/// Errors: kUnknownName.
InverseSemigroup builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// The diamond 0 < a, b < 1 with indices 0, a, b, 1.
Semilattice diamond_semilattice();
/// The chain of k elements, index 0 at the bottom.
Semilattice chain_semilattice(std::size_t k);

InverseSemigroup cyclic_group(std::size_t n);
InverseSemigroup brandt_semigroup(std::size_t n, std::size_t m);
/// G x C for a cyclic group G of order n and the k-element chain C.
InverseSemigroup group_times_chain(std::size_t n, std::size_t k);
/// Strong semilattice of cyclic groups over a family of subsets of {0..|primes|-1}
/// closed under intersection; the group over A has order prod_{i in A} primes[i]
/// and linking maps are reductions modulo.
InverseSemigroup strong_semilattice_of_cyclic_groups(const std::vector<std::uint32_t>& family,
                                                     const std::vector<std::size_t>& primes);
/// Relabels and reorders: element i of the result is element order[i] of s.
InverseSemigroup permuted(const InverseSemigroup& s, const std::vector<Index>& order,
                          std::vector<std::string> labels);

DirectedGraph path_graph(std::size_t n);
DirectedGraph parallel_graph(std::size_t k);

struct CorpusEntry {
  std::string name;
  std::shared_ptr<const InverseSemigroup> semigroup;
};

/// Builtins plus seeded random Clifford, strong-semilattice, partial-bijection
/// and Munn constructions. Deterministic for a given seed.
std::vector<CorpusEntry> corpus(std::uint64_t seed = 20240611);

}  // namespace isg
