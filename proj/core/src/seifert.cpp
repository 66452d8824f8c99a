#include "tkmoves/matrices.hpp"

#include <algorithm>
#include <stdexcept>

namespace tkm {

// Seifert matrix of the disk-band surface of a closed braid.  The H1 basis
// consists of one loop per pair of consecutive occurrences of a generator:
// down the earlier band, along the outer disk rim, up the later band, back
// along the inner rim.  Linking numbers reduce to three local patterns:
// band framings on the diagonal, the shared band of consecutive loops on one
// generator, and the rim crossings forced when loops of adjacent generators
// interleave along their common circle.
IntMatrix seifert_matrix_braid(const BraidWord& b) {
    b.validate();
    int m = static_cast<int>(b.letters.size());
    std::vector<std::vector<int>> pos(b.strands);  // generator index -> positions
    std::vector<int> eps(m);
    for (int t = 0; t < m; ++t) {
        int g = std::abs(b.letters[t]);
        pos[g].push_back(t);
        eps[t] = b.letters[t] > 0 ? 1 : -1;
    }
    for (int g = 1; g < b.strands; ++g)
        if (pos[g].empty())
            throw std::invalid_argument("seifert_matrix_braid: closure is disconnected");

    struct Cycle {
        int g;
        int lo, hi;  // word positions of the two bands
    };
    std::vector<Cycle> cyc;
    for (int g = 1; g < b.strands; ++g)
        for (size_t u = 0; u + 1 < pos[g].size(); ++u)
            cyc.push_back({g, pos[g][u], pos[g][u + 1]});

    int r = static_cast<int>(cyc.size());
    IntMatrix v = IntMatrix::zero(r, r);
    auto inside = [](int x, const Cycle& c) { return c.lo < x && x < c.hi; };

    for (int i = 0; i < r; ++i) {
        v.a[i][i] = -(eps[cyc[i].lo] + eps[cyc[i].hi]) / 2;
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            const Cycle& x = cyc[i];
            const Cycle& y = cyc[j];
            if (x.g == y.g) {
                // consecutive loops share one band; the half twist in it
                // pushes exactly one of the two parallels across the other
                if (x.hi == y.lo) {
                    int e = eps[x.hi];
                    v.a[i][j] += (1 + e) / 2;
                    v.a[j][i] += (e - 1) / 2;
                }
            } else if (y.g == x.g + 1) {
                // x rides the outer rim of the circle that y's inner rim
                // follows; each of x's band feet inside y's span crosses it
                v.a[j][i] += (inside(x.hi, y) ? 1 : 0) - (inside(x.lo, y) ? 1 : 0);
            }
        }
    }
    return v;
}

IntMatrix seifert_matrix(const LinkDiagram& d) {
    auto pieces = d.split_components();
    if (pieces.size() > 1) {
        // Tube the split pieces together: block sum plus one null generator
        // per tube.
        std::vector<IntMatrix> blocks;
        int total = static_cast<int>(pieces.size()) - 1;
        for (const auto& piece : pieces) {
            blocks.push_back(seifert_matrix(piece));
            total += blocks.back().rows;
        }
        IntMatrix v = IntMatrix::zero(total, total);
        int off = 0;
        for (const auto& blk : blocks) {
            for (int i = 0; i < blk.rows; ++i)
                for (int j = 0; j < blk.cols; ++j) v.a[off + i][off + j] = blk.a[i][j];
            off += blk.rows;
        }
        return v;
    }
    if (d.crossings.empty()) return IntMatrix::zero(0, 0);
    return seifert_matrix_braid(vogel_braid(d));
}

}  // namespace tkm
