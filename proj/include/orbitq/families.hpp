#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "orbitq/presentation.hpp"

namespace orbitq {

struct FamilyInfo {
    Family family;
    std::string id;
    std::vector<std::string> keys;
    std::vector<std::string> aliases;
};

inline const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> table{
        {Family::Nakayama, "nakayama", {"v", "r"}, {"n", "nakayama"}},
        {Family::Moebius, "moebius", {"l", "v"}, {"m", "moebius", "mobius"}},
        {Family::D1, "D_n_s_1", {"n", "s"}, {"d_n_s_1", "d1"}},
        {Family::D2, "D_n_s_2", {"n", "s"}, {"d_n_s_2", "d2"}},
        {Family::D4Triality, "D_4_s_3", {"s"}, {"d_4_s_3", "d3", "d4_3"}},
        {Family::D3m, "D_3m_s/3_1", {"m", "s"}, {"d_3m_s/3_1", "d3m"}},
        {Family::E1, "E_n_s_1", {"n", "s"}, {"e_n_s_1", "e1"}},
        {Family::E6Twist, "E_6_s_2", {"s"}, {"e_6_s_2", "e2", "e6_2"}},
    };
    return table;
}

inline const FamilyInfo& family_info(Family f) {
    for (const auto& info : family_table())
        if (info.family == f) return info;
    throw Error(ErrorCode::Internal, "unknown family");
}

inline Family parse_family(const std::string& text) {
    std::string key;
    for (char c : text) key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (const auto& info : family_table())
        if (std::find(info.aliases.begin(), info.aliases.end(), key) != info.aliases.end()) return info.family;
    throw Error(ErrorCode::BadParams, "unknown family '" + text + "'");
}

struct FamilyInstance {
    Family family = Family::Nakayama;
    std::map<std::string, int> params;
    friend bool operator==(const FamilyInstance&, const FamilyInstance&) = default;
};

inline int param(const FamilyInstance& x, const std::string& key) {
    auto it = x.params.find(key);
    if (it == x.params.end()) throw Error(ErrorCode::BadParams, "missing parameter " + key);
    return it->second;
}

inline void validate(const FamilyInstance& x) {
    const FamilyInfo& info = family_info(x.family);
    for (const auto& [k, v] : x.params)
        if (std::find(info.keys.begin(), info.keys.end(), k) == info.keys.end())
            throw Error(ErrorCode::BadParams, "unexpected parameter " + k + " for " + info.id);
    for (const auto& k : info.keys) param(x, k);
    auto require = [&](bool ok, const std::string& why) {
        if (!ok) throw Error(ErrorCode::BadParams, info.id + ": " + why);
    };
    switch (x.family) {
    case Family::Nakayama: require(param(x, "v") >= 1 && param(x, "r") >= 2, "need v >= 1 and r >= 2"); break;
    case Family::Moebius: require(param(x, "l") >= 1 && param(x, "v") >= 1, "need l, v >= 1"); break;
    case Family::D1:
    case Family::D2: require(param(x, "n") >= 4 && param(x, "s") >= 1, "need n >= 4 and s >= 1"); break;
    case Family::D4Triality: require(param(x, "s") >= 1, "need s >= 1"); break;
    case Family::D3m:
        require(param(x, "m") >= 2 && param(x, "s") >= 1, "need m >= 2 and s >= 1");
        require(param(x, "s") % 3 != 0, "s must not be divisible by 3");
        break;
    case Family::E1:
        require(param(x, "n") >= 6 && param(x, "n") <= 8 && param(x, "s") >= 1, "need n in 6..8 and s >= 1");
        break;
    case Family::E6Twist: require(param(x, "s") >= 1, "need s >= 1"); break;
    }
}

// N_{3,3}, M_{1,2}, D_{6,1/3,1}, ...
inline std::string display_name(const FamilyInstance& x) {
    auto p = [&](const std::string& k) { return std::to_string(param(x, k)); };
    switch (x.family) {
    case Family::Nakayama: return "N_{" + p("v") + "," + p("r") + "}";
    case Family::Moebius: return "M_{" + p("l") + "," + p("v") + "}";
    case Family::D1: return "D_{" + p("n") + "," + p("s") + ",1}";
    case Family::D2: return "D_{" + p("n") + "," + p("s") + ",2}";
    case Family::D4Triality: return "D_{4," + p("s") + ",3}";
    case Family::D3m: return "D_{" + std::to_string(3 * param(x, "m")) + "," + p("s") + "/3,1}";
    case Family::E1: return "E_{" + p("n") + "," + p("s") + ",1}";
    case Family::E6Twist: return "E_{6," + p("s") + ",2}";
    }
    return "?";
}

// Parses "l=2,v=1".
inline FamilyInstance parse_instance(const std::string& family, const std::string& params) {
    FamilyInstance x{parse_family(family), {}};
    std::size_t start = 0;
    while (start <= params.size() && !params.empty()) {
        const std::size_t comma = params.find(',', start);
        std::string item = params.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                   item.end());
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
            throw Error(ErrorCode::BadParams, "bad parameter '" + item + "', expected key=value");
        const std::string value = item.substr(eq + 1);
        if (value.size() > 6 || !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw Error(ErrorCode::BadParams, "bad value in '" + item + "'");
        if (!x.params.emplace(item.substr(0, eq), std::stoi(value)).second)
            throw Error(ErrorCode::BadParams, "repeated parameter in '" + item + "'");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    validate(x);
    return x;
}

namespace detail {

inline std::string arrow_name(const std::string& greek, int i, int j) {
    return greek + "^" + std::to_string(i) + "_" + std::to_string(j);
}

// Consecutive arrows of one kind, following `order` (subscripts in the order
// they are traversed within a block) and moving on to block i+1 mod s.
inline Path run(const std::string& greek, const std::vector<int>& order, int i, int first_sub, int length, int s) {
    Path p;
    std::size_t pos = std::find(order.begin(), order.end(), first_sub) - order.begin();
    for (int k = 0; k < length; ++k) {
        p.push_back(arrow_name(greek, i, order[pos]));
        if (++pos == order.size()) {
            pos = 0;
            i = (i + 1) % s;
        }
    }
    return p;
}

inline Path concat(Path a, const Path& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline std::vector<int> descending(int hi, int lo) {
    std::vector<int> v;
    for (int j = hi; j >= lo; --j) v.push_back(j);
    return v;
}

// Hub g<i> with three chains to g<i+1>: alpha (n-3 inner vertices), beta and gamma (one each).
inline void d_quiver(PresentationBuilder& b, int n, int s) {
    for (int i = 0; i < s; ++i) {
        const std::string g = "g" + std::to_string(i), next = "g" + std::to_string((i + 1) % s);
        const std::string c = "c" + std::to_string(i), bv = "b" + std::to_string(i);
        b.arrow(arrow_name("gamma", i, 0), g, c);
        b.arrow(arrow_name("gamma", i, 1), c, next);
        b.arrow(arrow_name("beta", i, 0), g, bv);
        b.arrow(arrow_name("beta", i, 1), bv, next);
        std::string prev = g;
        for (int j = n - 2; j >= 1; --j) {
            const std::string to = j == 1 ? next : "a" + std::to_string(i) + "." + std::to_string(j);
            b.arrow(arrow_name("alpha", i, j), prev, to);
            prev = to;
        }
    }
}

inline void e_quiver(PresentationBuilder& b, int n, int s) {
    for (int i = 0; i < s; ++i) {
        const std::string g = "g" + std::to_string(i), next = "g" + std::to_string((i + 1) % s);
        auto chain = [&](const std::string& greek, const std::string& tag, int top) {
            std::string prev = g;
            for (int j = top; j >= 1; --j) {
                const std::string to = j == 1 ? next : tag + std::to_string(i) + "." + std::to_string(j);
                b.arrow(arrow_name(greek, i, j), prev, to);
                prev = to;
            }
        };
        chain("gamma", "c", 2);
        chain("beta", "b", 3);
        chain("alpha", "a", n - 3);
    }
}

} // namespace detail

inline AlgebraPresentation presentation(const FamilyInstance& x) {
    validate(x);
    using detail::arrow_name;
    using detail::run;
    PresentationBuilder b(x.family, x.params);
    auto A = [](int i, int j) { return arrow_name("alpha", i, j); };
    auto B = [](int i, int j) { return arrow_name("beta", i, j); };
    auto G = [](int i, int j) { return arrow_name("gamma", i, j); };

    switch (x.family) {
    case Family::Nakayama: {
        const int v = param(x, "v"), r = param(x, "r");
        for (int i = 1; i <= v; ++i)
            b.arrow("alpha_" + std::to_string(i), std::to_string(i), std::to_string(i % v + 1));
        b.zero_all_paths(r);
        break;
    }
    case Family::Moebius: {
        const int l = param(x, "l"), v = param(x, "v");
        for (int i = 0; i < v; ++i) {
            const std::string hub = "c" + std::to_string(i), next = "c" + std::to_string((i + 1) % v);
            for (const std::string greek : {"alpha", "beta"}) {
                std::string prev = hub;
                for (int j = 0; j <= l; ++j) {
                    const std::string to = j == l ? next : greek.substr(0, 1) + std::to_string(i) + "." + std::to_string(j);
                    b.arrow(arrow_name(greek, i, j), prev, to);
                    prev = to;
                }
            }
        }
        std::vector<int> up;
        for (int j = 0; j <= l; ++j) up.push_back(j);
        for (int i = 0; i < v; ++i) b.comm({run("alpha", up, i, 0, l + 1, v), run("beta", up, i, 0, l + 1, v)});
        for (int i = 0; i + 1 < v; ++i) {
            b.zero({A(i, l), B(i + 1, 0)});
            b.zero({B(i, l), A(i + 1, 0)});
        }
        b.zero({A(v - 1, l), A(0, 0)});
        b.zero({B(v - 1, l), B(0, 0)});
        b.zero_all_paths(l + 2);
        break;
    }
    case Family::D1:
    case Family::D2:
    case Family::D4Triality: {
        const int n = x.family == Family::D4Triality ? 4 : param(x, "n"), s = param(x, "s");
        detail::d_quiver(b, n, s);
        const auto alpha_order = detail::descending(n - 2, 1);
        const std::vector<int> pair{0, 1};
        for (int i = 0; i < s; ++i)
            b.comm({run("alpha", alpha_order, i, n - 2, n - 2, s), run("beta", pair, i, 0, 2, s),
                    run("gamma", pair, i, 0, 2, s)});
        auto nx = [&](int i) { return (i + 1) % s; };
        if (x.family == Family::D1) {
            for (int i = 0; i < s; ++i) {
                b.zero({A(i, 1), B(nx(i), 0)});
                b.zero({A(i, 1), G(nx(i), 0)});
                b.zero({B(i, 1), A(nx(i), n - 2)});
                b.zero({G(i, 1), A(nx(i), n - 2)});
                b.zero({B(i, 1), G(nx(i), 0)});
                b.zero({G(i, 1), B(nx(i), 0)});
            }
            for (int i = 0; i < s; ++i)
                for (int j : alpha_order) b.zero(run("alpha", alpha_order, i, j, n - 1, s));
        } else if (x.family == Family::D2) {
            for (int i = 0; i < s; ++i) {
                b.zero({A(i, 1), B(nx(i), 0)});
                b.zero({A(i, 1), G(nx(i), 0)});
                b.zero({B(i, 1), A(nx(i), n - 2)});
                b.zero({G(i, 1), A(nx(i), n - 2)});
            }
            for (int i = 0; i + 1 < s; ++i) {
                b.zero({B(i, 1), G(i + 1, 0)});
                b.zero({G(i, 1), B(i + 1, 0)});
            }
            b.zero({B(s - 1, 1), B(0, 0)});
            b.zero({G(s - 1, 1), G(0, 0)});
            for (int i = 0; i < s; ++i)
                for (int j : alpha_order) b.zero(run("alpha", alpha_order, i, j, n - 1, s));
            for (int i = 0; i + 1 < s; ++i) {
                b.zero({B(i, 0), B(i, 1), B(i + 1, 0)});
                b.zero({G(i, 0), G(i, 1), G(i + 1, 0)});
                b.zero({B(i, 1), B(i + 1, 0), B(i + 1, 1)});
                b.zero({G(i, 1), G(i + 1, 0), G(i + 1, 1)});
            }
            b.zero({B(s - 1, 0), B(s - 1, 1), G(0, 0)});
            b.zero({G(s - 1, 0), G(s - 1, 1), B(0, 0)});
            b.zero({B(s - 1, 1), G(0, 0), G(0, 1)});
            b.zero({G(s - 1, 1), B(0, 0), B(0, 1)});
        } else {
            // Subscripts of alpha are read mod 2 here, so alpha_0 is alpha_2.
            for (int i = 0; i + 1 < s; ++i) {
                b.zero({A(i, 1), B(i + 1, 0)});
                b.zero({A(i, 1), G(i + 1, 0)});
                b.zero({B(i, 1), A(i + 1, 2)});
                b.zero({B(i, 1), G(i + 1, 0)});
                b.zero({G(i, 1), A(i + 1, 2)});
                b.zero({G(i, 1), B(i + 1, 0)});
            }
            b.zero({A(s - 1, 1), A(0, 2)});
            b.zero({A(s - 1, 1), G(0, 0)});
            b.zero({B(s - 1, 1), A(0, 2)});
            b.zero({B(s - 1, 1), B(0, 0)});
            b.zero({G(s - 1, 1), B(0, 0)});
            b.zero({G(s - 1, 1), G(0, 0)});
            b.zero_all_paths(3);
        }
        break;
    }
    case Family::D3m: {
        const int m = param(x, "m"), s = param(x, "s");
        auto hub = [&](int i) { return "B" + std::to_string((i - 1) % s + 1); };
        auto beta = [&](int i) { return "beta_" + std::to_string((i - 1) % s + 1); };
        auto alpha = [&](int i, int j) { return arrow_name("alpha", (i - 1) % s + 1, j); };
        for (int i = 1; i <= s; ++i) b.arrow(beta(i), hub(i), hub(i + 1));
        for (int i = 1; i <= s; ++i) {
            std::string prev = hub(i);
            for (int j = 1; j <= m; ++j) {
                const std::string to = j == m ? hub(i + 2) : "a" + std::to_string(i) + "." + std::to_string(j);
                b.arrow(alpha(i, j), prev, to);
                prev = to;
            }
        }
        auto alpha_span = [&](int i, int from, int to) {
            Path p;
            for (int j = from; j <= to; ++j) p.push_back(alpha(i, j));
            return p;
        };
        for (int i = 1; i <= s; ++i) b.comm({alpha_span(i, 1, m), {beta(i), beta(i + 1)}});
        for (int i = 1; i <= s; ++i) b.zero({alpha(i, m), alpha(i + 2, 1)});
        for (int i = 1; i <= s; ++i)
            for (int j = 1; j <= m; ++j)
                b.zero(detail::concat(detail::concat(alpha_span(i, j, m), {beta(i + 2)}), alpha_span(i + 3, 1, j)));
        break;
    }
    case Family::E1:
    case Family::E6Twist: {
        const int n = x.family == Family::E6Twist ? 6 : param(x, "n"), s = param(x, "s");
        detail::e_quiver(b, n, s);
        const auto ao = detail::descending(n - 3, 1), bo = detail::descending(3, 1), go = detail::descending(2, 1);
        auto nx = [&](int i) { return (i + 1) % s; };
        for (int i = 0; i < s; ++i)
            b.comm({run("alpha", ao, i, n - 3, n - 3, s), run("beta", bo, i, 3, 3, s), run("gamma", go, i, 2, 2, s)});
        if (x.family == Family::E1) {
            for (int i = 0; i < s; ++i) {
                b.zero({A(i, 1), B(nx(i), 3)});
                b.zero({A(i, 1), G(nx(i), 2)});
                b.zero({B(i, 1), A(nx(i), n - 3)});
                b.zero({B(i, 1), G(nx(i), 2)});
                b.zero({G(i, 1), A(nx(i), n - 3)});
                b.zero({G(i, 1), B(nx(i), 3)});
            }
            for (int i = 0; i < s; ++i) {
                for (int j : ao) b.zero(run("alpha", ao, i, j, n - 2, s));
                for (int j : bo) b.zero(run("beta", bo, i, j, 4, s));
                for (int j : go) b.zero(run("gamma", go, i, j, 3, s));
            }
        } else {
            for (int i = 0; i < s; ++i) {
                b.zero({G(i, 1), A(nx(i), 3)});
                b.zero({G(i, 1), B(nx(i), 3)});
                b.zero({A(i, 1), G(nx(i), 2)});
                b.zero({B(i, 1), G(nx(i), 2)});
            }
            for (int i = 0; i + 1 < s; ++i) {
                b.zero({A(i, 1), B(i + 1, 3)});
                b.zero({B(i, 1), A(i + 1, 3)});
            }
            b.zero({A(s - 1, 1), A(0, 3)});
            b.zero({B(s - 1, 1), B(0, 3)});
            for (int i = 0; i < s; ++i)
                for (int j : go) b.zero(run("gamma", go, i, j, 3, s));
            for (int i = 0; i + 1 < s; ++i)
                for (int j : bo) {
                    b.zero(run("alpha", ao, i, j, 4, s));
                    b.zero(run("beta", bo, i, j, 4, s));
                }
            for (int j : bo) {
                b.zero(detail::concat(run("alpha", ao, s - 1, j, j, s), run("beta", bo, 0, 3, 4 - j, s)));
                b.zero(detail::concat(run("beta", bo, s - 1, j, j, s), run("alpha", ao, 0, 3, 4 - j, s)));
            }
        }
        break;
    }
    }
    return b.build();
}

} // namespace orbitq
