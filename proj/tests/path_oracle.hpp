#pragma once

// Hom dimensions straight from the definition: the span of all paths x -> y
// modulo the two-sided ideal generated by the mesh relations.  Exponential in
// the path length, so only usable on small diagrams.

#include <map>
#include <vector>

#include "orbitq/mesh.hpp"

namespace testing_support {

using orbitq::ZVertex;

inline std::map<ZVertex, int> brute_force_homs(const orbitq::DynkinDiagram& d, ZVertex x, int max_len,
                                               std::map<int, int>* stratum_dims = nullptr) {
    using Path = std::vector<ZVertex>;
    std::vector<Path> paths{{x}};
    for (std::size_t k = 0; k < paths.size(); ++k) {
        if (static_cast<int>(paths[k].size()) - 1 == max_len) continue;
        for (const ZVertex& u : orbitq::z_successors(d, paths[k].back())) {
            Path p = paths[k];
            p.push_back(u);
            paths.push_back(std::move(p));
        }
    }
    std::map<ZVertex, std::map<Path, int>> basis;
    for (const Path& p : paths) {
        auto& b = basis[p.back()];
        b.emplace(p, static_cast<int>(b.size()));
    }
    std::map<ZVertex, int> dims;
    for (const auto& [y, index] : basis) {
        // Every generator q . m_z . p of the ideal shows up by taking a path
        // through theta z -> w -> z and summing over all middle vertices w.
        orbitq::gf::Matrix gens;
        for (const auto& [path, id] : index)
            for (std::size_t k = 0; k + 2 < path.size(); ++k) {
                const ZVertex z = path[k + 2];
                if (path[k] != ZVertex{z.column - 1, z.node}) continue;
                std::vector<std::uint64_t> row(index.size(), 0);
                for (const ZVertex& w : orbitq::z_successors(d, path[k])) {
                    Path q = path;
                    q[k + 1] = w;
                    row[index.at(q)] = orbitq::gf::add(row[index.at(q)], 1);
                }
                gens.push_back(std::move(row));
            }
        const int dim = static_cast<int>(index.size()) - orbitq::gf::rank(gens, static_cast<int>(index.size()));
        if (dim) dims[y] = dim;
        if (stratum_dims) (*stratum_dims)[orbitq::z_grade(d, y) - orbitq::z_grade(d, x)] += dim;
    }
    return dims;
}

} // namespace testing_support
