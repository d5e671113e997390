#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "orbitq/dynkin.hpp"

namespace orbitq {

inline std::vector<DynkinDiagram> all_diagrams(int max_rank) {
    std::vector<DynkinDiagram> out;
    for (int r = 1; r <= max_rank; ++r) out.emplace_back(Kind::A, r);
    for (int r = 4; r <= max_rank; ++r) out.emplace_back(Kind::D, r);
    for (int r = 6; r <= std::min(8, max_rank); ++r) out.emplace_back(Kind::E, r);
    return out;
}

// Random words over the tokens legal on d.
inline std::vector<std::string> random_words(const DynkinDiagram& d, int count, int max_len,
                                             std::mt19937& rng, int k_lo = -12, int k_hi = 30) {
    const bool phi_ok = (d.kind() == Kind::A && d.rank() % 2 == 1) || d.kind() == Kind::D ||
                        (d.kind() == Kind::E && d.rank() == 6);
    const bool rho_ok = d.kind() == Kind::D && d.rank() == 4;
    std::uniform_int_distribution<int> len(1, max_len), kind(0, 3), k(k_lo, k_hi), shift(-3, 3);
    std::vector<std::string> out;
    while (static_cast<int>(out.size()) < count) {
        std::string w;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) {
            std::string tok;
            switch (kind(rng)) {
            case 0: tok = "t^" + std::to_string(k(rng)); break;
            case 1: tok = "[" + std::to_string(shift(rng)) + "]"; break;
            case 2: tok = phi_ok ? "phi" : "t^" + std::to_string(k(rng)); break;
            case 3: tok = rho_ok ? "rho" : "t^" + std::to_string(k(rng)); break;
            }
            w += (w.empty() ? "" : "*") + tok;
        }
        out.push_back(w);
    }
    return out;
}

} // namespace orbitq
