#include "monodromy/reflection_group.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

#include "monodromy/elimination.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/vanishing.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monodromy {

namespace {

int validate_group(const GeneratedGroup& g) {
    if (!g.form.is_hermitian()) throw std::invalid_argument("group form is not hermitian");
    if (g.generators.empty()) throw std::invalid_argument("group needs at least one generator");
    if (g.cap < 1) throw std::invalid_argument("cap must be positive");
    int order = g.form.gram.common_order();
    for (const Matrix& m : g.generators) {
        if (m.rows() != g.form.dim() || m.cols() != g.form.dim())
            throw std::invalid_argument("generator shape does not match the form");
        if (!preserves_hermitian_form(m, g.form.gram))
            throw NotUnitaryGenerator("generator does not preserve the hermitian form");
        order = std::lcm(order, m.common_order());
    }
    return order;
}

} // namespace

ClosureResult group_closure(const GeneratedGroup& g, ExecPolicy policy) {
    const int field_order = validate_group(g);

    std::vector<Matrix> multipliers;
    {
        std::unordered_set<std::string> seen_mult;
        for (const Matrix& m : g.generators)
            for (const Matrix& cand : {m.embedded(field_order), inverse(m).embedded(field_order)})
                if (seen_mult.insert(cand.canonical_key(field_order)).second)
                    multipliers.push_back(cand);
    }

    ClosureResult result;
    const Matrix id = Matrix::identity(g.form.dim()).embedded(field_order);
    result.element_keys.insert(id.canonical_key(field_order));
    result.elements.push_back(id);
    std::deque<Matrix> frontier{id};
    bool exceeded = false;

    while (!frontier.empty() && !exceeded) {
        // one frontier generation at a time so the parallel expansion has a
        // deterministic merge order (frontier index, then multiplier index)
        std::vector<Matrix> batch(frontier.begin(), frontier.end());
        frontier.clear();
        std::vector<std::vector<std::pair<std::string, Matrix>>> produced(batch.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (policy == ExecPolicy::Parallel)
#endif
        for (std::size_t b = 0; b < batch.size(); ++b) {
            auto& out = produced[b];
            out.reserve(multipliers.size());
            for (const Matrix& m : multipliers) {
                Matrix prod = m * batch[b];
                out.emplace_back(prod.canonical_key(field_order), std::move(prod));
            }
        }
        for (auto& out : produced) {
            for (auto& [key, prod] : out) {
                if (!result.element_keys.insert(key).second) continue;
                if (static_cast<long long>(result.element_keys.size()) > g.cap) {
                    exceeded = true;
                    break;
                }
                result.elements.push_back(prod);
                frontier.push_back(std::move(prod));
            }
            if (exceeded) break;
        }
    }

    result.finite = !exceeded;
    result.count = static_cast<long long>(result.element_keys.size());
    if (!result.finite) result.elements.clear();
    return result;
}

DichotomyResult dichotomy_probe(int lambda_order, const Cyclotomic& h12,
                                std::pair<int, int> signature, int cap) {
    if (lambda_order <= 2)
        throw std::invalid_argument("the dichotomy needs a reflection eigenvalue different from +-1");
    if (signature.first + signature.second != 2)
        throw BadSignature("dichotomy probe is rank-2 only");
    Matrix gram(2, 2);
    gram.at(0, 0) = Cyclotomic(Rational(1));
    gram.at(1, 1) = Cyclotomic(Rational(1));
    gram.at(0, 1) = h12;
    gram.at(1, 0) = h12.conj();
    const HermitianForm form = hermitian_form(gram);
    const Signature sig = hermitian_signature(form);
    if (sig.radical != 0 || sig.positive != signature.first || sig.negative != signature.second)
        throw BadSignature("inner product h12 does not realize the requested signature");
    const Cyclotomic lambda = Cyclotomic::root_of_unity(lambda_order, 1);
    const std::vector<Cyclotomic> one{Cyclotomic(Rational(1)), Cyclotomic()};
    const std::vector<Cyclotomic> two{Cyclotomic(), Cyclotomic(Rational(1))};
    GeneratedGroup g{form,
                     {reflection_matrix({lambda, one, 1, form}), reflection_matrix({lambda, two, 1, form})},
                     cap};
    const ClosureResult closure = group_closure(g);
    return DichotomyResult{closure.finite, closure.count};
}

namespace {

int span_rank(const std::vector<std::vector<Cyclotomic>>& vectors) {
    auto rows = vectors;
    return detail::echelon_rank(rows);
}

} // namespace

SubspaceProbeResult invariant_subspace_probe(const GeneratedGroup& g) {
    validate_group(g);
    const int n = g.form.dim();
    for (const Matrix& gen : g.generators) {
        // reflection roots: nonzero columns of gen - identity
        const Matrix moved = gen - Matrix::identity(n);
        for (int j = 0; j < n; ++j) {
            std::vector<Cyclotomic> root(static_cast<std::size_t>(n));
            bool nonzero = false;
            for (int i = 0; i < n; ++i) {
                root[static_cast<std::size_t>(i)] = moved.at(i, j);
                nonzero = nonzero || !moved.at(i, j).is_zero();
            }
            if (!nonzero) continue;
            // grow span(root) until invariant under every generator
            std::vector<std::vector<Cyclotomic>> span{root};
            int rank = 1;
            bool grew = true;
            while (grew && rank < n) {
                grew = false;
                const auto snapshot = span;
                for (const auto& v : snapshot) {
                    for (const Matrix& h : g.generators) {
                        std::vector<Cyclotomic> image = apply(h, v);
                        span.push_back(image);
                        const int next_rank = span_rank(span);
                        if (next_rank > rank) {
                            rank = next_rank;
                            grew = true;
                        } else {
                            span.pop_back();
                        }
                    }
                }
            }
            if (rank < n) {
                auto rows = span;
                detail::reduced_echelon(rows);
                return SubspaceProbeResult{false, rows};
            }
        }
    }
    return SubspaceProbeResult{true, {}};
}

} // namespace monodromy
