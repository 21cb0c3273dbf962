#include "monodromy/classify.hpp"

#include <stdexcept>

#include "monodromy/errors.hpp"

namespace monodromy {

namespace {

char family_letter(LieFamily f) {
    switch (f) {
        case LieFamily::A: return 'A';
        case LieFamily::B: return 'B';
        case LieFamily::C: return 'C';
        default: return 'D';
    }
}

} // namespace

std::string LieType::name() const {
    std::string out;
    out += family_letter(family);
    out += std::to_string(rank);
    out += '=';
    switch (real_form) {
        case RealFormKind::SplitSymplectic:
            out += "sp(" + std::to_string(2 * rank) + ",R)";
            break;
        case RealFormKind::SpecialOrthogonal:
            out += "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
            break;
        case RealFormKind::SpecialUnitary:
            out += "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
            break;
    }
    if (!simple) out += "[non-simple]";
    return out;
}

LieType group_type_natural(int d, int n) {
    const long long b = primitive_betti(d, n);
    LieType t;
    if (n % 2 == 1) {
        t.family = LieFamily::C;
        t.rank = static_cast<int>(b / 2);
        t.real_form = RealFormKind::SplitSymplectic;
        t.real_rank = t.rank;
        t.simple = t.rank >= 1;
        return t;
    }
    const auto [r, s] = signature_primitive(d, n);
    t.real_form = RealFormKind::SpecialOrthogonal;
    t.p = static_cast<int>(r);
    t.q = static_cast<int>(s);
    const long long total = r + s;
    t.family = (total % 2 == 1) ? LieFamily::B : LieFamily::D;
    t.rank = static_cast<int>(total / 2);
    t.real_rank = static_cast<int>(std::min(r, s));
    t.simple = !(t.family == LieFamily::D && t.rank <= 2) && t.rank >= 1;
    return t;
}

LieType group_type_cover(int d, int n, int k, int i) {
    const CoverSpec spec{d, n, k, i};
    spec.validate();
    LieType t;
    if (2 * i != k) {
        const auto [p, q] = eigenspace_signature(spec);
        t.family = LieFamily::A;
        t.rank = static_cast<int>(p + q) - 1;
        t.real_form = RealFormKind::SpecialUnitary;
        t.p = static_cast<int>(p);
        t.q = static_cast<int>(q);
        t.real_rank = static_cast<int>(std::min(p, q));
        t.simple = t.rank >= 1;
        return t;
    }
    // mu = -1 carries a real structure on the cover's middle cohomology,
    // of weight n+1: symplectic when that weight is odd, orthogonal when even.
    const HodgeVector hv = hodge_cyclic_eigenspace(spec);
    const long long total = hv.total();
    if ((n + 1) % 2 == 1) {
        t.family = LieFamily::C;
        t.rank = static_cast<int>(total / 2);
        t.real_form = RealFormKind::SplitSymplectic;
        t.real_rank = t.rank;
        t.simple = t.rank >= 1;
        return t;
    }
    long long r = 0, s = 0;
    for (int p = 0; p <= n + 1; ++p) (p % 2 == 0 ? r : s) += hv.h(p);
    t.real_form = RealFormKind::SpecialOrthogonal;
    t.p = static_cast<int>(r);
    t.q = static_cast<int>(s);
    t.family = (total % 2 == 1) ? LieFamily::B : LieFamily::D;
    t.rank = static_cast<int>(total / 2);
    t.real_rank = static_cast<int>(std::min(r, s));
    t.simple = !(t.family == LieFamily::D && t.rank <= 2) && t.rank >= 1;
    return t;
}

namespace {

// Collapse the exceptional low-rank identifications to one representative.
std::pair<char, int> normalized_type(const LieType& t) {
    if (t.family == LieFamily::D && t.rank == 2) return {'2', 2}; // A1 x A1, matches only itself
    if (t.rank == 1) return {'A', 1};                             // A1 = B1 = C1
    if (t.rank == 2 && (t.family == LieFamily::B || t.family == LieFamily::C)) return {'B', 2};
    if (t.family == LieFamily::D && t.rank == 3) return {'A', 3};
    return {family_letter(t.family), t.rank};
}

} // namespace

bool locally_isomorphic(const LieType& a, const LieType& b) {
    return normalized_type(a) == normalized_type(b);
}

long long discriminant_degree(int d, int n) {
    if (d < 2 || n < 0) throw std::invalid_argument("discriminant_degree needs d >= 2, n >= 0");
    long long deg = n + 2;
    for (int e = 0; e <= n; ++e) deg *= (d - 1);
    return deg;
}

bool product_obstruction(int d, int k) {
    if (k < 2 || d % k != 0) throw std::invalid_argument("k must be a divisor of d with k >= 2");
    if (d % 2 == 0) throw ScopeError("the abelianization argument covers odd d only");
    return 2LL * k < discriminant_degree(d, 2);
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::KernelLarge: return "KernelLarge";
        case Verdict::KernelFinite: return "KernelFinite";
        case Verdict::PhiFinite: return "PhiFinite";
        default: return "ExceptionalCase";
    }
}

std::string verdict_cell(const ClassificationRecord& rec) {
    std::string out = verdict_name(rec.verdict);
    if (!rec.verdict_detail.empty()) out += "(" + rec.verdict_detail + ")";
    return out;
}

namespace {

// Numerator degree for the derivative witness: the largest a(q) subject to
// p > q and a >= 0, which lands at q = floor(n/2).
int witness_numerator_degree(int d, int n, int k, int i) {
    const int q = n / 2;
    return (q + 1) * d - i * (d / k) - (n + 2);
}

} // namespace

ClassificationRecord classify(int d, int n) {
    if (d < 2 || n < 0) throw std::invalid_argument("classify needs d >= 2, n >= 0");
    ClassificationRecord rec;
    rec.d = d;
    rec.n = n;
    rec.betti = primitive_betti(d, n);
    rec.hodge = hodge_hypersurface(d, n);
    rec.g_type = group_type_natural(d, n);

    if (d <= 2) {
        rec.verdict = Verdict::PhiFinite;
        rec.reasons.push_back("degree <= 2: the discriminant complement of a quadric family has finite cyclic fundamental group");
        return rec;
    }
    if (d == 3 && n == 0) {
        rec.verdict = Verdict::ExceptionalCase;
        rec.phi_order = 12;
        rec.verdict_detail = "|Phi|=12";
        rec.reasons.push_back("three unordered points on the line: the sphere braid group on three strands is finite of order 12");
        return rec;
    }
    if (d == 3 && n == 1) {
        rec.verdict = Verdict::KernelFinite;
        rec.kernel_order = 27;
        rec.verdict_detail = "|K|=27";
        rec.reasons.push_back("plane cubics: the kernel is the Heisenberg group over F_3, order 27, with image SL(2,Z)");
        return rec;
    }

    const int k = (d % 2 == 0 && !(d == 4 && n == 1)) ? 2 : d;
    rec.k = k;
    const GradedIdeal jac = fermat_jacobian_ideal(d, n + 2);
    std::vector<int> candidates;
    if (k == 2) candidates.push_back(1);
    else if (n == 0)
        for (int i = 2; i <= k - 1; ++i) candidates.push_back(i);
    else
        for (int i = 1; i <= k - 1; ++i) candidates.push_back(i);

    for (int i : candidates) {
        const int a = witness_numerator_degree(d, n, k, i);
        if (a < 0) continue;
        if (hodge_cyclic_eigenspace(CoverSpec{d, n, k, i}).total() < 2) continue;
        auto w = torelli_witness(jac, a, d);
        if (!w) continue;
        rec.i = i;
        rec.witness = w;
        rec.torelli_witness_found = true;
        break;
    }

    if (!rec.torelli_witness_found) {
        rec.verdict = Verdict::ExceptionalCase;
        rec.verdict_detail = "no derivative witness";
        rec.reasons.push_back("no eigenspace produced a nonzero period-map derivative witness; outside the classified range");
        return rec;
    }

    rec.gprime_type = group_type_cover(d, n, k, *rec.i);
    rec.rank_ok = rec.g_type.real_rank >= 2;
    rec.nonisomorphic = !locally_isomorphic(rec.g_type, *rec.gprime_type);

    const std::string witness_text =
        "k=" + std::to_string(k) + " cover, eigenspace i=" + std::to_string(*rec.i) +
        ": derivative witness A=" + monomial_to_string(rec.witness->first) +
        ", Q=" + monomial_to_string(rec.witness->second) + " with A*Q nonzero in the Jacobian ring";
    const std::string density_text =
        "the discriminant is dual to an irreducible variety, so meridian reflections form a single "
        "orbit; with the nonzero derivative the covering monodromy is Zariski-dense, not finite";

    if (rec.rank_ok) {
        if (!rec.nonisomorphic)
            throw InternalInconsistency("main-path classification hit locally isomorphic types");
        rec.verdict = Verdict::KernelLarge;
        rec.reasons.push_back("natural image is an arithmetic lattice in " + rec.g_type.name() +
                              ", real rank " + std::to_string(rec.g_type.real_rank) + " >= 2");
        rec.reasons.push_back(witness_text);
        rec.reasons.push_back(density_text);
        rec.reasons.push_back(rec.g_type.name() + " and " + rec.gprime_type->name() +
                              " are not locally isomorphic, so rigidity forces a dense kernel image");
        if (k == 2)
            rec.reasons.push_back("remark: for double covers the covering image is itself a lattice (recorded, not verified)");
        return rec;
    }

    if (rec.g_type.real_rank == 0) {
        rec.exceptional_path = true;
        rec.verdict = Verdict::KernelLarge;
        rec.reasons.push_back("natural image lies in the compact group " + rec.g_type.name() +
                              ", hence is finite, and the kernel has finite index");
        rec.reasons.push_back(witness_text);
        rec.reasons.push_back(density_text);
        rec.reasons.push_back("a finite-index subgroup of a group with Zariski-dense noncompact image is large");
        return rec;
    }

    rec.verdict = Verdict::ExceptionalCase;
    rec.verdict_detail = "real rank 1";
    rec.reasons.push_back("natural image has real rank one: neither the rigidity route nor the finite-image route applies");
    return rec;
}

} // namespace monodromy
