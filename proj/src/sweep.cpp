#include "monodromy/sweep.hpp"

#include "monodromy/graded.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monodromy {

bool parallel_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

std::vector<ClassificationRecord> classification_table(int d_max, int n_max, ExecPolicy policy) {
    std::vector<std::pair<int, int>> grid;
    for (int d = 2; d <= d_max; ++d)
        for (int n = 0; n <= n_max; ++n) grid.emplace_back(d, n);
    std::vector<ClassificationRecord> rows(grid.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (policy == ExecPolicy::Parallel)
#endif
    for (std::size_t idx = 0; idx < grid.size(); ++idx)
        rows[idx] = classify(grid[idx].first, grid[idx].second);
    (void)policy;
    return rows;
}

std::string table_csv(const std::vector<ClassificationRecord>& rows) {
    std::string out = "d,n,B,r,s,rank_R,rank_C,g_type,k,i,gprime_type,verdict\n";
    for (const auto& rec : rows) {
        out += std::to_string(rec.d) + "," + std::to_string(rec.n) + "," + std::to_string(rec.betti) + ",";
        if (rec.n % 2 == 0) {
            const auto [r, s] = signature_primitive(rec.d, rec.n);
            out += std::to_string(r) + "," + std::to_string(s) + ",";
        } else {
            out += ",,";
        }
        out += std::to_string(rank_real(rec.d, rec.n)) + "," + std::to_string(rank_complex(rec.d, rec.n)) + ",";
        out += rec.g_type.name() + ",";
        out += (rec.k ? std::to_string(*rec.k) : "") + ",";
        out += (rec.i ? std::to_string(*rec.i) : "") + ",";
        out += (rec.gprime_type ? rec.gprime_type->name() : "") + ",";
        out += verdict_cell(rec) + "\n";
    }
    return out;
}

std::vector<DualityCell> macaulay_duality_sweep(int d_max, int nvars_max, ExecPolicy policy) {
    std::vector<DualityCell> cells;
    for (int d = 2; d <= d_max; ++d)
        for (int nvars = 2; nvars <= nvars_max; ++nvars) {
            const int t = socle_degree(d, nvars);
            for (int a = 0; a <= t; ++a) cells.push_back(DualityCell{d, nvars, a});
        }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (policy == ExecPolicy::Parallel)
#endif
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        DualityCell& c = cells[idx];
        const GradedIdeal ideal = fermat_jacobian_ideal(c.d, c.nvars);
        const int t = socle_degree(c.d, c.nvars);
        c.dim_a = graded_dim(ideal, c.a);
        c.dim_dual = graded_dim(ideal, t - c.a);
        c.pairing_ok = macaulay_check(c.d, c.nvars, c.a);
    }
    (void)policy;
    return cells;
}

} // namespace monodromy
