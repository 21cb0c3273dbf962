// Times the serial reference against the OpenMP kernels on the three sweep
// workloads and checks that both policies produce identical results.

#include <chrono>
#include <cstdio>

#include "monodromy/reflection_group.hpp"
#include "monodromy/sweep.hpp"

using namespace monodromy;

namespace {

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

GeneratedGroup growth_probe_group(int cap) {
    Matrix gram(2, 2);
    gram.at(0, 0) = Cyclotomic(Rational(1));
    gram.at(1, 1) = Cyclotomic(Rational(1));
    gram.at(0, 1) = Cyclotomic(Rational(2));
    gram.at(1, 0) = Cyclotomic(Rational(2));
    const HermitianForm form = hermitian_form(gram);
    const Cyclotomic lambda = Cyclotomic::root_of_unity(3, 1);
    const std::vector<Cyclotomic> e1{Cyclotomic(Rational(1)), Cyclotomic()};
    const std::vector<Cyclotomic> e2{Cyclotomic(), Cyclotomic(Rational(1))};
    return GeneratedGroup{form,
                          {reflection_matrix({lambda, e1, 1, form}), reflection_matrix({lambda, e2, 1, form})},
                          cap};
}

} // namespace

int main() {
    std::printf("openmp: %s\n", parallel_enabled() ? "enabled" : "disabled (serial fallback)");

    {
        std::vector<ClassificationRecord> serial_rows, parallel_rows;
        const double ts = seconds([&] { serial_rows = classification_table(7, 4, ExecPolicy::Serial); });
        const double tp = seconds([&] { parallel_rows = classification_table(7, 4, ExecPolicy::Parallel); });
        const bool same = table_csv(serial_rows) == table_csv(parallel_rows);
        std::printf("classification table 2..7 x 0..4: serial %.3fs, parallel %.3fs, speedup %.2fx, match=%s\n",
                    ts, tp, ts / tp, same ? "yes" : "NO");
        if (!same) return 1;
    }

    {
        std::vector<DualityCell> serial_cells, parallel_cells;
        const double ts = seconds([&] { serial_cells = macaulay_duality_sweep(5, 5, ExecPolicy::Serial); });
        const double tp = seconds([&] { parallel_cells = macaulay_duality_sweep(5, 5, ExecPolicy::Parallel); });
        bool same = serial_cells.size() == parallel_cells.size();
        for (std::size_t i = 0; same && i < serial_cells.size(); ++i)
            same = serial_cells[i].dim_a == parallel_cells[i].dim_a &&
                   serial_cells[i].dim_dual == parallel_cells[i].dim_dual &&
                   serial_cells[i].pairing_ok == parallel_cells[i].pairing_ok;
        std::printf("duality sweep d<=5, nvars<=5 (%zu cells): serial %.3fs, parallel %.3fs, speedup %.2fx, match=%s\n",
                    serial_cells.size(), ts, tp, ts / tp, same ? "yes" : "NO");
        if (!same) return 1;
    }

    {
        const GeneratedGroup g = growth_probe_group(20000);
        ClosureResult serial_res, parallel_res;
        const double ts = seconds([&] { serial_res = group_closure(g, ExecPolicy::Serial); });
        const double tp = seconds([&] { parallel_res = group_closure(g, ExecPolicy::Parallel); });
        const bool same = serial_res.finite == parallel_res.finite && serial_res.count == parallel_res.count;
        std::printf("closure growth probe (cap 20000): serial %.3fs, parallel %.3fs, speedup %.2fx, match=%s\n",
                    ts, tp, ts / tp, same ? "yes" : "NO");
        if (!same) return 1;
    }
    return 0;
}
