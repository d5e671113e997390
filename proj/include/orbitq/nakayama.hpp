#pragma once

#include <algorithm>
#include <string>

#include "orbitq/error.hpp"
#include "orbitq/translation_quiver.hpp"

namespace orbitq {

// Indecomposable N_{v,r}-module with socle `socle` (1..v) and Loewy length
// `length`.  Its composition factors run from the top socle-length+1 down to
// the socle, indices mod v.
struct NakayamaModule {
    int socle = 1;
    int length = 1;
    friend bool operator==(const NakayamaModule&, const NakayamaModule&) = default;
};

inline std::string to_string(const NakayamaModule& m) {
    return "M_" + std::to_string(m.socle) + "^" + std::to_string(m.length);
}

namespace detail {
inline int mod1(int n, int v) { return ((n - 1) % v + v) % v + 1; }

inline void check_nakayama(int v, int r) {
    if (v < 1 || r < 2) throw Error(ErrorCode::BadParams, "Nakayama algebra needs v >= 1 and r >= 2");
}
} // namespace detail

// Stable AR-quiver of mod N_{v,r}, built from the uniserial modules: the
// radical inclusions M_n^l -> M_n^{l+1}, the socle quotients
// M_n^l -> M_{n-1}^{l-1}, and tau M_n^l = M_{n+1}^l.
inline TransQuiver nakayama_stable_ar(int v, int r) {
    detail::check_nakayama(v, r);
    TransQuiver q;
    auto id = [&](int n, int l) { return *q.find(to_string(NakayamaModule{detail::mod1(n, v), l})); };
    for (int n = 1; n <= v; ++n)
        for (int l = 1; l <= r - 1; ++l) q.add_vertex(to_string(NakayamaModule{n, l}));
    for (int n = 1; n <= v; ++n)
        for (int l = 1; l <= r - 1; ++l) {
            if (l + 1 <= r - 1) q.add_arrow(id(n, l), id(n, l + 1));
            if (l >= 2) q.add_arrow(id(n, l), id(n - 1, l - 1));
            q.set_translation(id(n, l), id(n + 1, l));
        }
    return q;
}

// dim of Hom(a, b) modulo maps factoring through projectives.  A nonzero map
// with image of length k exists when the length-k quotient of a is the
// length-k submodule of b; it factors through the projective cover of b
// exactly when k + r - length(b) <= length(a).
inline int nakayama_stable_hom(int v, int r, NakayamaModule a, NakayamaModule b) {
    detail::check_nakayama(v, r);
    for (const auto& m : {a, b})
        if (m.socle < 1 || m.socle > v || m.length < 1 || m.length > r - 1)
            throw Error(ErrorCode::BadParams, to_string(m) + " is not a non-projective N_{" + std::to_string(v) + "," +
                                                  std::to_string(r) + "}-module");
    const int top_a = a.socle - a.length + 1;
    int dim = 0;
    for (int k = 1; k <= std::min(a.length, b.length); ++k) {
        const int top_image = b.socle - k + 1;
        if (detail::mod1(top_a, v) != detail::mod1(top_image, v)) continue;
        if (k + r - b.length > a.length) ++dim;
    }
    return dim;
}

} // namespace orbitq
