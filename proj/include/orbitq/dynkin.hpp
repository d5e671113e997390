#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "orbitq/error.hpp"

namespace orbitq {

enum class Kind { A, D, E };

inline char kind_letter(Kind k) { return k == Kind::A ? 'A' : (k == Kind::D ? 'D' : 'E'); }

struct Arrow {
    int from;
    int to;
    friend bool operator==(const Arrow&, const Arrow&) = default;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// A Dynkin quiver with the fixed orientation used everywhere downstream:
//   A_r: 1 -> 2 -> ... -> r
//   D_r: 1 -> ... -> r-2, r-2 -> r-1, r-2 -> r
//   E_r: 1 -> 2 -> ... -> r-1, 3 -> r
// Vertices are 1-based.
class DynkinDiagram {
public:
    DynkinDiagram() : DynkinDiagram(Kind::A, 1) {}

    DynkinDiagram(Kind kind, int rank) : kind_(kind), rank_(rank) {
        bool legal = false;
        switch (kind) {
        case Kind::A: legal = rank >= 1; break;
        case Kind::D: legal = rank >= 4; break;
        case Kind::E: legal = rank >= 6 && rank <= 8; break;
        }
        if (!legal)
            throw Error(ErrorCode::IllegalRank,
                        std::string("no Dynkin diagram ") + kind_letter(kind) + std::to_string(rank));
        build();
    }

    Kind kind() const { return kind_; }
    int rank() const { return rank_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<int>& successors(int i) const { return succ_[i - 1]; }
    const std::vector<int>& predecessors(int i) const { return pred_[i - 1]; }

    // Longest directed path ending at i; gives the grading 2n + depth(i) on ZDelta.
    int depth(int i) const { return depth_[i - 1]; }
    int max_depth() const { return *std::max_element(depth_.begin(), depth_.end()); }

    std::string name() const { return std::string(1, kind_letter(kind_)) + std::to_string(rank_); }

    friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
        return a.kind_ == b.kind_ && a.rank_ == b.rank_;
    }

private:
    void build() {
        arrows_.clear();
        switch (kind_) {
        case Kind::A:
            for (int i = 1; i < rank_; ++i) arrows_.push_back({i, i + 1});
            break;
        case Kind::D:
            for (int i = 1; i < rank_ - 2; ++i) arrows_.push_back({i, i + 1});
            arrows_.push_back({rank_ - 2, rank_ - 1});
            arrows_.push_back({rank_ - 2, rank_});
            break;
        case Kind::E:
            for (int i = 1; i < rank_ - 1; ++i) arrows_.push_back({i, i + 1});
            arrows_.push_back({3, rank_});
            break;
        }
        std::sort(arrows_.begin(), arrows_.end());
        succ_.assign(rank_, {});
        pred_.assign(rank_, {});
        for (auto [a, b] : arrows_) {
            succ_[a - 1].push_back(b);
            pred_[b - 1].push_back(a);
        }
        // Arrows always go from smaller to larger labels, so one pass suffices.
        depth_.assign(rank_, 0);
        for (int i = 1; i <= rank_; ++i)
            for (int p : pred_[i - 1]) depth_[i - 1] = std::max(depth_[i - 1], depth_[p - 1] + 1);
    }

    Kind kind_;
    int rank_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> succ_, pred_;
    std::vector<int> depth_;
};

inline DynkinDiagram make_diagram(Kind kind, int rank) { return DynkinDiagram(kind, rank); }

inline int coxeter_number(const DynkinDiagram& d) {
    const int n = d.rank();
    switch (d.kind()) {
    case Kind::A: return n + 1;
    case Kind::D: return 2 * n - 2;
    case Kind::E: return n == 6 ? 12 : (n == 7 ? 18 : 30);
    }
    return 0;
}

inline int loewy_length(const DynkinDiagram& d) {
    const int n = d.rank();
    switch (d.kind()) {
    case Kind::A: return n;
    case Kind::D: return 2 * n - 3;
    case Kind::E: return n == 6 ? 11 : (n == 7 ? 17 : 29);
    }
    return 0;
}

// Accepts "A3", "d4", "E_6".
inline DynkinDiagram parse_diagram(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != '_' && c != ' ') s += c;
    if (s.size() < 2) throw Error(ErrorCode::ParseError, "bad diagram name '" + text + "'");
    Kind kind;
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': kind = Kind::A; break;
    case 'D': kind = Kind::D; break;
    case 'E': kind = Kind::E; break;
    default: throw Error(ErrorCode::ParseError, "bad diagram kind in '" + text + "'");
    }
    const std::string digits = s.substr(1);
    if (digits.empty() || digits.size() > 4 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw Error(ErrorCode::ParseError, "bad diagram rank in '" + text + "'");
    return DynkinDiagram(kind, std::stoi(digits));
}

} // namespace orbitq
