#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orbitq/error.hpp"

namespace orbitq {

// Arrow names in the order the arrows are traversed.
using Path = std::vector<std::string>;

struct NamedArrow {
    std::string name;
    std::string from;
    std::string to;
};

struct Relation {
    enum Type { Zero, Comm } type = Zero;
    std::vector<Path> paths; // Zero: one path; Comm: all paths equal
};

enum class Family { Nakayama, Moebius, D1, D2, D4Triality, D3m, E1, E6Twist };

struct AlgebraPresentation {
    Family family = Family::Nakayama;
    std::map<std::string, int> params;
    std::vector<std::string> vertices;
    std::vector<NamedArrow> arrows;
    std::vector<Relation> relations;

    const NamedArrow& arrow(const std::string& name) const {
        for (const auto& a : arrows)
            if (a.name == name) return a;
        throw Error(ErrorCode::Internal, "no arrow named " + name);
    }
};

// Written the usual algebra way: the last arrow traversed comes first.
inline std::string format_path(const Path& p) {
    std::string out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) out += (out.empty() ? "" : " ") + *it;
    return out;
}

inline std::string format_relations(const AlgebraPresentation& a) {
    std::ostringstream out;
    for (const auto& rel : a.relations) {
        if (rel.type == Relation::Zero) {
            out << format_path(rel.paths.front()) << " = 0\n";
        } else {
            for (std::size_t k = 0; k < rel.paths.size(); ++k) out << (k ? " = " : "") << format_path(rel.paths[k]);
            out << "\n";
        }
    }
    return out.str();
}

class PresentationBuilder {
public:
    PresentationBuilder(Family f, std::map<std::string, int> params) {
        p_.family = f;
        p_.params = std::move(params);
    }

    const std::string& vertex(const std::string& name) {
        if (std::find(p_.vertices.begin(), p_.vertices.end(), name) == p_.vertices.end()) p_.vertices.push_back(name);
        return name;
    }

    void arrow(const std::string& name, const std::string& from, const std::string& to) {
        vertex(from);
        vertex(to);
        if (index_.count(name)) throw Error(ErrorCode::Internal, "duplicate arrow " + name);
        index_[name] = p_.arrows.size();
        p_.arrows.push_back({name, from, to});
    }

    void zero(const Path& path) {
        check_path(path);
        p_.relations.push_back({Relation::Zero, {path}});
    }

    void comm(const std::vector<Path>& paths) {
        if (paths.size() < 2) throw Error(ErrorCode::Internal, "commutativity relation needs two paths");
        for (const auto& path : paths) {
            check_path(path);
            if (source(path) != source(paths.front()) || target(path) != target(paths.front()))
                throw Error(ErrorCode::Internal, "relation paths do not share endpoints: " + format_path(path));
        }
        p_.relations.push_back({Relation::Comm, paths});
    }

    // Every path of the given length, except those that already contain a
    // listed zero relation.
    void zero_all_paths(int length) {
        std::vector<Path> zeros;
        for (const auto& r : p_.relations)
            if (r.type == Relation::Zero) zeros.push_back(r.paths.front());
        for (const Path& path : paths_of_length(length)) {
            bool implied = false;
            for (const Path& z : zeros)
                implied = implied || std::search(path.begin(), path.end(), z.begin(), z.end()) != path.end();
            if (!implied) zero(path);
        }
    }

    AlgebraPresentation build() const { return p_; }

private:
    const NamedArrow& get(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw Error(ErrorCode::Internal, "unknown arrow " + name);
        return p_.arrows[it->second];
    }
    std::string source(const Path& p) const { return get(p.front()).from; }
    std::string target(const Path& p) const { return get(p.back()).to; }

    void check_path(const Path& path) const {
        if (path.empty()) throw Error(ErrorCode::Internal, "empty path in relation");
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            if (get(path[k]).to != get(path[k + 1]).from)
                throw Error(ErrorCode::Internal, "path is not composable: " + format_path(path));
    }

    std::vector<Path> paths_of_length(int length) const {
        std::vector<Path> current;
        for (const auto& a : p_.arrows) current.push_back({a.name});
        for (int k = 1; k < length; ++k) {
            std::vector<Path> next;
            for (const Path& path : current)
                for (const auto& a : p_.arrows)
                    if (a.from == get(path.back()).to) {
                        Path q = path;
                        q.push_back(a.name);
                        next.push_back(std::move(q));
                    }
            current = std::move(next);
        }
        return current;
    }

    AlgebraPresentation p_;
    std::map<std::string, std::size_t> index_;
};

// Validation of a finished presentation: composable paths sharing endpoints.
inline bool relations_well_formed(const AlgebraPresentation& a) {
    std::map<std::string, const NamedArrow*> by_name;
    for (const auto& x : a.arrows) by_name[x.name] = &x;
    for (const auto& rel : a.relations) {
        if (rel.paths.empty() || (rel.type == Relation::Comm && rel.paths.size() < 2)) return false;
        std::string src, dst;
        for (const auto& p : rel.paths) {
            if (p.empty()) return false;
            for (const auto& name : p)
                if (!by_name.count(name)) return false;
            for (std::size_t k = 0; k + 1 < p.size(); ++k)
                if (by_name[p[k]]->to != by_name[p[k + 1]]->from) return false;
            const std::string s = by_name[p.front()]->from, t = by_name[p.back()]->to;
            if (src.empty()) {
                src = s;
                dst = t;
            } else if (s != src || t != dst) {
                return false;
            }
        }
    }
    return true;
}

} // namespace orbitq
