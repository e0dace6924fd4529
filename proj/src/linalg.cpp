#include "pnb/linalg.hpp"

#include <utility>

namespace pnb {

long rank(IntMat m) {
    const long rows = m.rows(), cols = m.cols();
    long r = 0;
    Int prev(1);
    std::vector<long> col_of(static_cast<size_t>(cols));
    for (long c = 0; c < cols; ++c) col_of[static_cast<size_t>(c)] = c;

    auto swap_rows = [&](long a, long b) {
        if (a == b) return;
        for (long c = 0; c < cols; ++c) std::swap(m.at(a, c), m.at(b, c));
    };
    auto swap_cols = [&](long a, long b) {
        if (a == b) return;
        for (long i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    };

    while (r < rows && r < cols) {
        long pr = -1, pc = -1;
        for (long i = r; i < rows && pr < 0; ++i)
            for (long c = r; c < cols; ++c)
                if (m.at(i, c) != 0) {
                    pr = i;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        swap_rows(r, pr);
        swap_cols(r, pc);
        std::swap(col_of[static_cast<size_t>(r)], col_of[static_cast<size_t>(pc)]);

        // Bareiss step: a_ij <- (a_rr * a_ij - a_ir * a_rj) / prev, exactly.
        for (long i = r + 1; i < rows; ++i) {
            for (long c = r + 1; c < cols; ++c) {
                Int num = m.at(r, r) * m.at(i, c) - m.at(i, r) * m.at(r, c);
                mpz_divexact(m.at(i, c).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, r) = 0;
        }
        prev = m.at(r, r);
        ++r;
    }
    return r;
}

}  // namespace pnb
