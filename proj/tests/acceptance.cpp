// Runs the seven acceptance criteria and prints one PASS/FAIL line each.
// All comparisons are exact: tolerance 0.

#include <chrono>
#include <iostream>

#include "orbitq/checks.hpp"

int main() {
    using namespace orbitq::checks;
    using Clock = std::chrono::steady_clock;
    const std::vector<std::function<Report()>> criteria{
        group_relations, fixture_isomorphisms,
        nakayama_oracle, mesh_oracle,
        [] { return classification_round_trip(); }, quotient_counting,
        negative_controls,
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = Clock::now();
        const Report r = criteria[k]();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        std::cout << (r.passed() ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << r.name << " ("
                  << r.checked - r.failed << "/" << r.checked << " exact checks, tolerance 0, " << ms << " ms)\n";
        for (const auto& f : r.failures) std::cout << "    " << f << "\n";
        failed += !r.passed();
    }
    std::cout << (failed ? "FAIL" : "PASS") << " overall: " << criteria.size() - failed << "/" << criteria.size()
              << " criteria\n";
    return failed ? 1 : 0;
}
