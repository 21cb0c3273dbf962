#include "monodromy/graded.hpp"

#include <algorithm>
#include <stdexcept>

#include "monodromy/elimination.hpp"
#include "monodromy/errors.hpp"

namespace monodromy {

WeightedRing standard_ring(int nvars) {
    if (nvars <= 0) throw std::invalid_argument("ring needs at least one variable");
    return WeightedRing{nvars, std::vector<int>(static_cast<std::size_t>(nvars), 1)};
}

int weighted_degree(const WeightedRing& ring, const Monomial& m) {
    if (static_cast<int>(m.size()) != ring.nvars)
        throw std::invalid_argument("monomial length does not match ring");
    int deg = 0;
    for (int v = 0; v < ring.nvars; ++v)
        deg += ring.weights[static_cast<std::size_t>(v)] * m[static_cast<std::size_t>(v)];
    return deg;
}

bool divides(const Monomial& divisor, const Monomial& m) {
    if (divisor.size() != m.size()) return false;
    for (std::size_t v = 0; v < m.size(); ++v)
        if (divisor[v] > m[v]) return false;
    return true;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw std::invalid_argument("monomial length mismatch");
    Monomial p(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) p[v] = a[v] + b[v];
    return p;
}

std::string monomial_to_string(const Monomial& m) {
    std::string out;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(v);
        if (m[v] > 1) out += "^" + std::to_string(m[v]);
    }
    return out.empty() ? "1" : out;
}

Polynomial monomial_poly(Monomial m, Rational coeff) {
    Polynomial p;
    if (coeff != 0) p.emplace(std::move(m), std::move(coeff));
    return p;
}

Polynomial poly_product(const Polynomial& a, const Polynomial& b) {
    Polynomial p;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m = monomial_product(ma, mb);
            Rational c = ca * cb;
            auto it = p.find(m);
            if (it == p.end()) {
                if (c != 0) p.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) p.erase(it);
            }
        }
    return p;
}

std::optional<int> homogeneous_degree(const WeightedRing& ring, const Polynomial& p) {
    std::optional<int> deg;
    for (const auto& [m, c] : p) {
        if (c == 0) continue;
        const int d = weighted_degree(ring, m);
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

GradedIdeal make_ideal(WeightedRing ring, std::vector<Polynomial> generators) {
    GradedIdeal ideal;
    ideal.ring = std::move(ring);
    ideal.monomial_fast_path = true;
    for (auto& g : generators) {
        auto deg = homogeneous_degree(ideal.ring, g);
        if (!deg) throw std::invalid_argument("ideal generator is zero or not homogeneous");
        ideal.generator_degrees.push_back(*deg);
        if (g.size() == 1) ideal.generator_monomials.push_back(g.begin()->first);
        else ideal.monomial_fast_path = false;
        ideal.generators.push_back(std::move(g));
    }
    if (!ideal.monomial_fast_path) ideal.generator_monomials.clear();
    return ideal;
}

GradedIdeal fermat_jacobian_ideal(int d, int nvars) {
    if (d < 2) throw std::invalid_argument("fermat degree must be >= 2");
    WeightedRing ring = standard_ring(nvars);
    std::vector<Polynomial> gens;
    for (int v = 0; v < nvars; ++v) {
        Monomial m(static_cast<std::size_t>(nvars), 0);
        m[static_cast<std::size_t>(v)] = d - 1;
        gens.push_back(monomial_poly(std::move(m)));
    }
    return make_ideal(std::move(ring), std::move(gens));
}

namespace {

void enumerate_monomials(const WeightedRing& ring, int var, int remaining, Monomial& cur,
                         std::vector<Monomial>& out) {
    if (var == ring.nvars) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    if (var == ring.nvars - 1) {
        const int w = ring.weights[static_cast<std::size_t>(var)];
        if (remaining % w == 0) {
            cur[static_cast<std::size_t>(var)] = remaining / w;
            out.push_back(cur);
            cur[static_cast<std::size_t>(var)] = 0;
        }
        return;
    }
    const int w = ring.weights[static_cast<std::size_t>(var)];
    for (int e = remaining / w; e >= 0; --e) {
        cur[static_cast<std::size_t>(var)] = e;
        enumerate_monomials(ring, var + 1, remaining - e * w, cur, out);
    }
    cur[static_cast<std::size_t>(var)] = 0;
}

} // namespace

std::vector<Monomial> monomial_basis(const WeightedRing& ring, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial cur(static_cast<std::size_t>(ring.nvars), 0);
    enumerate_monomials(ring, 0, degree, cur, out);
    return out;
}

namespace {

// Counts degree-a monomials outside the monomial ideal without materializing
// them: branches whose every completion is divisible by a generator are cut.
long long count_outside_monomial_ideal(const WeightedRing& ring, const std::vector<Monomial>& gens,
                                       const std::vector<int>& max_support, int var, int remaining,
                                       std::vector<char>& alive) {
    if (var == ring.nvars) {
        if (remaining != 0) return 0;
        for (std::size_t gi = 0; gi < gens.size(); ++gi)
            if (alive[gi]) return 0;
        return 1;
    }
    long long total = 0;
    const int w = ring.weights[static_cast<std::size_t>(var)];
    std::vector<char> next(alive.size());
    for (int e = 0; e * w <= remaining; ++e) {
        bool cut = false;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            next[gi] = alive[gi] && e >= gens[gi][static_cast<std::size_t>(var)];
            if (next[gi] && max_support[gi] <= var) {
                cut = true;
                break;
            }
        }
        if (cut) continue;
        total += count_outside_monomial_ideal(ring, gens, max_support, var + 1, remaining - e * w, next);
    }
    return total;
}

std::vector<std::vector<Rational>> ideal_slice_rows(const GradedIdeal& ideal, int a,
                                                    const std::vector<Monomial>& all,
                                                    const std::map<Monomial, int>& index) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t gi = 0; gi < ideal.generators.size(); ++gi) {
        const int shift = a - ideal.generator_degrees[gi];
        if (shift < 0) continue;
        for (const Monomial& m : monomial_basis(ideal.ring, shift)) {
            std::vector<Rational> row(all.size(), Rational(0));
            for (const auto& [gm, gc] : ideal.generators[gi]) {
                const Monomial prod = monomial_product(gm, m);
                row[static_cast<std::size_t>(index.at(prod))] += gc;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace

int graded_dim(const GradedIdeal& ideal, int a) {
    if (a < 0) return 0;
    if (!ideal.monomial_fast_path) return graded_dim_linalg(ideal, a);
    std::vector<int> max_support(ideal.generator_monomials.size(), -1);
    for (std::size_t gi = 0; gi < ideal.generator_monomials.size(); ++gi)
        for (int v = 0; v < ideal.ring.nvars; ++v)
            if (ideal.generator_monomials[gi][static_cast<std::size_t>(v)] > 0) max_support[gi] = v;
    std::vector<char> alive(ideal.generator_monomials.size(), 1);
    const long long count = count_outside_monomial_ideal(ideal.ring, ideal.generator_monomials,
                                                         max_support, 0, a, alive);
    return static_cast<int>(count);
}

int graded_dim_linalg(const GradedIdeal& ideal, int a) {
    if (a < 0) return 0;
    const auto all = monomial_basis(ideal.ring, a);
    std::map<Monomial, int> index;
    for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], static_cast<int>(i));
    auto rows = ideal_slice_rows(ideal, a, all, index);
    return static_cast<int>(all.size()) - detail::echelon_rank(rows);
}

int socle_degree(int d, int nvars) {
    if (d < 2 || nvars < 1) throw std::invalid_argument("socle_degree needs d >= 2, nvars >= 1");
    return nvars * (d - 2);
}

QuotientPiece::QuotientPiece(const GradedIdeal& ideal, int degree)
    : degree_(degree), fast_path_(ideal.monomial_fast_path) {
    if (degree < 0) return;
    all_ = monomial_basis(ideal.ring, degree);
    for (std::size_t i = 0; i < all_.size(); ++i) index_.emplace(all_[i], static_cast<int>(i));
    if (fast_path_) {
        for (std::size_t i = 0; i < all_.size(); ++i) {
            bool in_ideal = false;
            for (const Monomial& g : ideal.generator_monomials)
                if (divides(g, all_[i])) {
                    in_ideal = true;
                    break;
                }
            if (!in_ideal) {
                basis_.push_back(all_[i]);
                basis_pos_.push_back(static_cast<int>(i));
            }
        }
        return;
    }
    rref_rows_ = ideal_slice_rows(ideal, degree, all_, index_);
    rref_pivots_ = detail::reduced_echelon(rref_rows_);
    std::vector<bool> is_pivot(all_.size(), false);
    for (int p : rref_pivots_) is_pivot[static_cast<std::size_t>(p)] = true;
    for (std::size_t i = 0; i < all_.size(); ++i)
        if (!is_pivot[i]) {
            basis_.push_back(all_[i]);
            basis_pos_.push_back(static_cast<int>(i));
        }
}

std::vector<Rational> QuotientPiece::reduce(const Polynomial& p) const {
    std::vector<Rational> coords(all_.size(), Rational(0));
    for (const auto& [m, c] : p) {
        if (c == 0) continue;
        auto it = index_.find(m);
        if (it == index_.end())
            throw std::invalid_argument("polynomial is not homogeneous of the slice degree");
        coords[static_cast<std::size_t>(it->second)] += c;
    }
    if (!fast_path_) {
        for (std::size_t r = 0; r < rref_rows_.size(); ++r) {
            const auto p_col = static_cast<std::size_t>(rref_pivots_[r]);
            if (coords[p_col] == 0) continue;
            const Rational f = coords[p_col];
            const auto& row = rref_rows_[r];
            for (std::size_t c = p_col; c < row.size(); ++c)
                if (row[c] != 0) coords[c] -= f * row[c];
        }
    }
    std::vector<Rational> out;
    out.reserve(basis_.size());
    for (int pos : basis_pos_) out.push_back(coords[static_cast<std::size_t>(pos)]);
    return out;
}

bool macaulay_check(int d, int nvars, int a) {
    if (d < 2 || nvars < 2) throw std::invalid_argument("macaulay_check needs d >= 2, nvars >= 2");
    const int t = socle_degree(d, nvars);
    if (a < 0 || a > t) throw OutOfRange("macaulay_check degree outside [0, t]");
    const GradedIdeal ideal = fermat_jacobian_ideal(d, nvars);
    if (graded_dim(ideal, t) != 1) return false;
    const QuotientPiece left(ideal, a);
    const QuotientPiece right(ideal, t - a);
    if (left.dim() != right.dim()) return false;
    const Monomial socle(static_cast<std::size_t>(nvars), d - 2);
    std::vector<std::vector<Rational>> pairing(static_cast<std::size_t>(left.dim()));
    for (int i = 0; i < left.dim(); ++i) {
        auto& row = pairing[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(right.dim()), Rational(0));
        for (int j = 0; j < right.dim(); ++j)
            if (monomial_product(left.basis()[static_cast<std::size_t>(i)],
                                 right.basis()[static_cast<std::size_t>(j)]) == socle)
                row[static_cast<std::size_t>(j)] = Rational(1);
    }
    return detail::echelon_rank(pairing) == left.dim();
}

Matrix multiplication_map(const GradedIdeal& ideal, const Polynomial& q, int a) {
    const auto dq = homogeneous_degree(ideal.ring, q);
    if (!dq) throw std::invalid_argument("multiplier must be nonzero and homogeneous");
    const QuotientPiece domain(ideal, a);
    const QuotientPiece codomain(ideal, a + *dq);
    Matrix m(codomain.dim(), domain.dim());
    for (int j = 0; j < domain.dim(); ++j) {
        const Polynomial image = poly_product(q, monomial_poly(domain.basis()[static_cast<std::size_t>(j)]));
        const std::vector<Rational> col = codomain.reduce(image);
        for (int i = 0; i < codomain.dim(); ++i)
            if (col[static_cast<std::size_t>(i)] != 0) m.at(i, j) = Cyclotomic(col[static_cast<std::size_t>(i)]);
    }
    return m;
}

std::optional<std::pair<Monomial, Monomial>> torelli_witness(const GradedIdeal& ideal, int a, int d) {
    if (!ideal.monomial_fast_path)
        throw std::invalid_argument("torelli_witness searches monomial ideals only");
    const QuotientPiece numerators(ideal, a);
    const QuotientPiece tangents(ideal, d);
    for (const Monomial& A : numerators.basis())
        for (const Monomial& Q : tangents.basis()) {
            const Monomial prod = monomial_product(A, Q);
            bool in_ideal = false;
            for (const Monomial& g : ideal.generator_monomials)
                if (divides(g, prod)) {
                    in_ideal = true;
                    break;
                }
            if (!in_ideal) return std::make_pair(A, Q);
        }
    return std::nullopt;
}

} // namespace monodromy
