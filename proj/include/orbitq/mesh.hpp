#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "orbitq/translation_quiver.hpp"

namespace orbitq {

// Exact arithmetic in GF(2^31 - 1).
namespace gf {

constexpr std::uint64_t prime = 2147483647ULL;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) { return (a + b) % prime; }
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return (a + prime - b) % prime; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return (a * b) % prime; }
inline std::uint64_t neg(std::uint64_t a) { return (prime - a) % prime; }

inline std::uint64_t inverse(std::uint64_t a) {
    std::uint64_t result = 1, e = prime - 2;
    for (a %= prime; e; e >>= 1, a = mul(a, a))
        if (e & 1) result = mul(result, a);
    return result;
}

using Matrix = std::vector<std::vector<std::uint64_t>>;

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(Matrix& m, int columns) {
    std::vector<int> pivots;
    int row = 0;
    for (int c = 0; c < columns && row < static_cast<int>(m.size()); ++c) {
        int p = row;
        while (p < static_cast<int>(m.size()) && m[p][c] == 0) ++p;
        if (p == static_cast<int>(m.size())) continue;
        std::swap(m[p], m[row]);
        const std::uint64_t scale = inverse(m[row][c]);
        for (auto& x : m[row]) x = mul(x, scale);
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == row || m[r][c] == 0) continue;
            const std::uint64_t f = m[r][c];
            for (int k = 0; k < columns; ++k) m[r][k] = sub(m[r][k], mul(f, m[row][k]));
        }
        pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    return pivots;
}

inline int rank(Matrix m, int columns) { return static_cast<int>(rref(m, columns).size()); }

} // namespace gf

struct ColumnWindow {
    int lo = 0;
    int hi = 0;
};

// Nonzero hom dimensions out of one source vertex.
struct HomTable {
    ZVertex source;
    std::map<ZVertex, int> dims;

    int at(ZVertex y) const {
        auto it = dims.find(y);
        return it == dims.end() ? 0 : it->second;
    }
    int total() const {
        int s = 0;
        for (const auto& [v, k] : dims) s += k;
        return s;
    }
    friend bool operator==(const HomTable&, const HomTable&) = default;
};

inline ColumnWindow default_window(const DynkinDiagram& d, ZVertex x) {
    return {x.column, x.column + loewy_length(d) + 1};
}

inline void check_window(const DynkinDiagram& d, ZVertex x, ColumnWindow w) {
    if (x.node < 1 || x.node > d.rank())
        throw Error(ErrorCode::VertexNotInQuotient, to_string(x) + " is not a vertex of Z" + d.name());
    if (w.lo > w.hi) throw Error(ErrorCode::EmptyWindow, "empty hom window");
    if (w.lo > x.column || w.hi < x.column + loewy_length(d) + 1)
        throw Error(ErrorCode::WindowTooNarrow, "window " + std::to_string(w.lo) + ":" + std::to_string(w.hi) +
                                                    " must cover columns " + std::to_string(x.column) + ".." +
                                                    std::to_string(x.column + loewy_length(d) + 1));
}

namespace detail {

// Vertices of the window whose grade lies in [grade(x), grade(x) + span], by grade.
inline std::vector<ZVertex> graded_window(const DynkinDiagram& d, ZVertex x, ColumnWindow w, int span) {
    std::vector<ZVertex> out;
    const int g0 = z_grade(d, x);
    for (int c = w.lo; c <= w.hi; ++c)
        for (int i = 1; i <= d.rank(); ++i) {
            const int g = z_grade(d, {c, i});
            if (g >= g0 && g <= g0 + span) out.push_back({c, i});
        }
    std::stable_sort(out.begin(), out.end(),
                     [&](ZVertex a, ZVertex b) { return z_grade(d, a) < z_grade(d, b); });
    return out;
}

} // namespace detail

// Hom spaces of the mesh category, one grade at a time.  For y != x the path
// space into y splits along the last arrow, and the mesh ideal at y adds the
// image of Hom(x, theta y) under f -> (sigma(beta) f)_beta.  So
//   Hom(x, y) = coker( Hom(x, theta y) -> (+)_{beta: w -> y} Hom(x, w) ),
// tracked together with the matrices of every arrow acting on these spaces.
inline HomTable hom_dims_linear(const DynkinDiagram& d, ZVertex x, ColumnWindow w) {
    check_window(d, x, w);
    const int m = loewy_length(d);
    const int g0 = z_grade(d, x);
    std::map<ZVertex, int> dim;
    std::map<std::pair<ZVertex, ZVertex>, gf::Matrix> act; // (w, y) -> dim y by dim w
    std::vector<int> stratum(m + 2, 0);
    auto dim_of = [&](ZVertex v) {
        auto it = dim.find(v);
        return it == dim.end() ? 0 : it->second;
    };
    for (const ZVertex& y : detail::graded_window(d, x, w, m + 1)) {
        if (y == x) {
            dim[y] = 1;
            stratum[0] += 1;
            continue;
        }
        std::vector<ZVertex> preds;
        std::vector<int> offset;
        int total = 0;
        for (const ZVertex& p : z_predecessors(d, y)) {
            preds.push_back(p);
            offset.push_back(total);
            total += dim_of(p);
        }
        if (total == 0) continue;
        const ZVertex ty{y.column - 1, y.node};
        const int dt = dim_of(ty);
        gf::Matrix rows; // images of the mesh relation, one row per basis vector of Hom(x, theta y)
        for (int k = 0; k < dt; ++k) {
            std::vector<std::uint64_t> row(total, 0);
            for (std::size_t b = 0; b < preds.size(); ++b) {
                const int dp = dim_of(preds[b]);
                if (dp == 0) continue;
                const gf::Matrix& a = act.at({ty, preds[b]});
                for (int r = 0; r < dp; ++r) row[offset[b] + r] = a[r][k];
            }
            rows.push_back(std::move(row));
        }
        const std::vector<int> pivots = gf::rref(rows, total);
        std::vector<int> quotient_index(total, -1);
        int dy = 0;
        for (int c = 0; c < total; ++c)
            if (!std::binary_search(pivots.begin(), pivots.end(), c)) quotient_index[c] = dy++;
        if (dy == 0) continue;
        gf::Matrix proj(dy, std::vector<std::uint64_t>(total, 0));
        for (int c = 0; c < total; ++c)
            if (quotient_index[c] >= 0) proj[quotient_index[c]][c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            for (int c = 0; c < total; ++c)
                if (quotient_index[c] >= 0 && rows[r][c]) proj[quotient_index[c]][pivots[r]] = gf::neg(rows[r][c]);
        for (std::size_t b = 0; b < preds.size(); ++b) {
            const int dp = dim_of(preds[b]);
            if (dp == 0) continue;
            gf::Matrix a(dy, std::vector<std::uint64_t>(dp));
            for (int r = 0; r < dy; ++r)
                for (int c = 0; c < dp; ++c) a[r][c] = proj[r][offset[b] + c];
            act[{preds[b], y}] = std::move(a);
        }
        dim[y] = dy;
        stratum[z_grade(d, y) - g0] += dy;
    }
    ensure(stratum[m] == 0 && stratum[m + 1] == 0, "paths of length >= Loewy length survive the mesh ideal");
    return {x, dim};
}

inline HomTable hom_dims_linear(const DynkinDiagram& d, ZVertex x) { return hom_dims_linear(d, x, default_window(d, x)); }

// Knitting: f(x) = 1 and f(y) = max(0, sum over arrows v -> y of f(v) - f(theta y)).
inline HomTable hom_dims_hammock(const DynkinDiagram& d, ZVertex x, ColumnWindow w) {
    check_window(d, x, w);
    std::map<ZVertex, int> f;
    auto value = [&](ZVertex v) {
        auto it = f.find(v);
        return it == f.end() ? 0 : it->second;
    };
    for (const ZVertex& y : detail::graded_window(d, x, w, loewy_length(d) + 1)) {
        if (y == x) {
            f[y] = 1;
            continue;
        }
        int s = 0;
        for (const ZVertex& p : z_predecessors(d, y)) s += value(p);
        const int v = std::max(0, s - value({y.column - 1, y.node}));
        if (v) f[y] = v;
    }
    return {x, f};
}

inline HomTable hom_dims_hammock(const DynkinDiagram& d, ZVertex x) { return hom_dims_hammock(d, x, default_window(d, x)); }

// Rows are diagram nodes (highest on top), columns run over the support.
inline std::string format_grid(const DynkinDiagram& d, const HomTable& t) {
    int hi = t.source.column;
    for (const auto& [v, k] : t.dims) hi = std::max(hi, v.column);
    std::ostringstream out;
    out << "source " << to_string(t.source) << "\n" << std::setw(5) << "";
    for (int c = t.source.column; c <= hi; ++c) out << std::setw(4) << c;
    out << "\n";
    for (int i = d.rank(); i >= 1; --i) {
        out << std::setw(3) << i << " |";
        for (int c = t.source.column; c <= hi; ++c) {
            const int k = t.at({c, i});
            out << std::setw(4) << (k ? std::to_string(k) : std::string("."));
        }
        out << "\n";
    }
    return out.str();
}

} // namespace orbitq
