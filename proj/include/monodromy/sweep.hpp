#pragma once

#include <string>
#include <vector>

#include "monodromy/classify.hpp"
#include "monodromy/exec.hpp"

namespace monodromy {

// One classification record per (d, n), 2 <= d <= d_max, 0 <= n <= n_max,
// ordered by (d, n) regardless of which rows were computed concurrently.
std::vector<ClassificationRecord> classification_table(int d_max, int n_max,
                                                       ExecPolicy policy = ExecPolicy::Serial);

// Stable column order: d,n,B,r,s,rank_R,rank_C,g_type,k,i,gprime_type,verdict.
std::string table_csv(const std::vector<ClassificationRecord>& rows);

struct DualityCell {
    int d = 0, nvars = 0, a = 0;
    int dim_a = 0, dim_dual = 0;
    bool pairing_ok = false;

    bool ok() const { return dim_a == dim_dual && pairing_ok; }
};

// Macaulay duality across every Fermat ring with 2 <= d <= d_max,
// 2 <= nvars <= nvars_max and every degree 0 <= a <= t.
std::vector<DualityCell> macaulay_duality_sweep(int d_max, int nvars_max,
                                                ExecPolicy policy = ExecPolicy::Serial);

} // namespace monodromy
