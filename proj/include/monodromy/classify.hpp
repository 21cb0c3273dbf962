#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monodromy/graded.hpp"
#include "monodromy/hodge.hpp"

namespace monodromy {

enum class LieFamily { A, B, C, D };

enum class RealFormKind { SplitSymplectic, SpecialOrthogonal, SpecialUnitary };

struct LieType {
    LieFamily family = LieFamily::A;
    int rank = 0;
    RealFormKind real_form = RealFormKind::SplitSymplectic;
    int p = 0, q = 0; // so(p,q) / su(p,q); unused for the split symplectic form
    int real_rank = 0;
    bool simple = true; // D2 = A1 x A1 is flagged non-simple

    std::string name() const; // e.g. "C5=sp(10,R)", "B10=so(2,19)", "A4=su(1,4)"
};

// Automorphisms of the primitive middle cohomology preserving the cup
// product: symplectic for odd n, orthogonal with the computed signature for
// even n.
LieType group_type_natural(int d, int n);

// Factor of the covering monodromy target: su(p, q) on a non-real
// eigenspace, orthogonal or symplectic (by the parity of n+1) on the -1
// eigenspace.
LieType group_type_cover(int d, int n, int k, int i);

// Same complexified type up to the low-rank identifications
// A1 = B1 = C1, B2 = C2, A3 = D3; D2 matches only itself (non-simple).
bool locally_isomorphic(const LieType& a, const LieType& b);

// (n+2)(d-1)^(n+1); for surfaces this is the classical 4(d-1)^3.
long long discriminant_degree(int d, int n);

// Largest element order 2k in the abelianization of a would-be product
// Gamma x Gamma' stays below the discriminant degree 4(d-1)^3; d odd, k | d.
bool product_obstruction(int d, int k);

enum class Verdict { KernelLarge, KernelFinite, PhiFinite, ExceptionalCase };

std::string verdict_name(Verdict v);

struct ClassificationRecord {
    int d = 0, n = 0;
    long long betti = 0;
    HodgeVector hodge;
    LieType g_type;
    std::optional<int> k, i;
    std::optional<LieType> gprime_type;
    bool torelli_witness_found = false;
    std::optional<std::pair<Monomial, Monomial>> witness;
    bool rank_ok = false;
    bool nonisomorphic = false;
    Verdict verdict = Verdict::ExceptionalCase;
    std::string verdict_detail;          // e.g. "|Phi|=12" or "|K|=27"
    std::optional<long long> phi_order;  // finite full group, when known
    std::optional<long long> kernel_order;
    bool exceptional_path = false; // finite natural image, density witness carries the verdict
    std::vector<std::string> reasons;
};

// Full decision procedure for one (d, n).
ClassificationRecord classify(int d, int n);

std::string verdict_cell(const ClassificationRecord& rec); // verdict plus detail, for tables

} // namespace monodromy
