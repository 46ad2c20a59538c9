// Prints (as CSV) the diagonal Bergman kernel along a radial path for the two
// Hartogs families, together with the sharp L^p interval for small n, k.
// Build and run:  ./demos/kernel_profile > profile.csv

#include <iostream>

#include "bergman/bergman.hpp"
#include "bergman/csv.hpp"

using namespace bergman;

int main() {
    CsvTable kernel_rows;
    kernel_rows.header = {"kind", "n", "k", "r", "fiber_fraction", "diagonal_kernel"};
    for (auto spec : {hartogs_polydisc(1, 2), hartogs_ball(2, 1)}) {
        for (int i = 1; i <= 18; ++i) {
            const double r = 0.05 * i;
            const double frac = 0.5;
            CPoint p;
            p.coords.resize(spec.ambient_dim());
            p.coords[0] = {r, 0.0};
            for (int j = 0; j < spec.n; ++j)
                p.coords[1 + j] = {frac * ipow(r, spec.k) / std::sqrt(double(spec.n)), 0.0};
            kernel_rows.rows.push_back({kind_name(spec.kind), CsvTable::cell(spec.n),
                                        CsvTable::cell(spec.k), CsvTable::cell(r), CsvTable::cell(frac),
                                        CsvTable::cell(kernel_closed(spec, p, p).real())});
        }
    }
    kernel_rows.write(std::cout);

    std::cout << "\n";
    CsvTable intervals;
    intervals.header = {"n", "k", "p_low", "p_high"};
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            const auto iv = critical_interval(n, k);
            intervals.rows.push_back(
                {CsvTable::cell(n), CsvTable::cell(k), iv.p_low.str(), iv.p_high.str()});
        }
    intervals.write(std::cout);
    return 0;
}
