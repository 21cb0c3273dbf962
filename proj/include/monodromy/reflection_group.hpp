#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "monodromy/exec.hpp"
#include "monodromy/hermitian.hpp"
#include "monodromy/matrix.hpp"

namespace monodromy {

// Group generated by exactly-unitary matrices inside U(form), enumerated up
// to a cap on the number of distinct elements.
struct GeneratedGroup {
    HermitianForm form;
    std::vector<Matrix> generators;
    int cap = 20000;
};

struct ClosureResult {
    bool finite = false;
    long long count = 0; // group order when finite, elements found otherwise
    std::unordered_set<std::string> element_keys;
    std::vector<Matrix> elements; // populated for finite closures only
};

// Breadth-first closure under left multiplication by the generators and
// their inverses, with canonical-form hashing for exact dedup.  The parallel
// policy expands each frontier with OpenMP and merges deterministically; the
// result never depends on the schedule.
ClosureResult group_closure(const GeneratedGroup& g, ExecPolicy policy = ExecPolicy::Serial);

struct DichotomyResult {
    bool finite = false;   // FiniteWitness vs GrowthEvidence
    long long count = 0;
};

// Two lambda-reflections on a rank-2 hermitian space with h(d1,d1) =
// h(d2,d2) = 1 and h(d1,d2) = h12: exact closure attempt.  Indefinite
// signature with lambda != +-1 and h12 != 0 is expected to grow past any cap
// (reported as evidence, never as a proof of infiniteness).
DichotomyResult dichotomy_probe(int lambda_order, const Cyclotomic& h12,
                                std::pair<int, int> signature, int cap);

struct SubspaceProbeResult {
    bool irreducible = false;
    std::vector<std::vector<Cyclotomic>> subspace_basis; // set when reducible
};

// Smallest generator-invariant subspace containing each reflection root;
// reports the first proper one found, else irreducibility evidence.
SubspaceProbeResult invariant_subspace_probe(const GeneratedGroup& g);

} // namespace monodromy
