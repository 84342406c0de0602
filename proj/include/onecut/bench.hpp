#pragma once

#include <chrono>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "onecut/oracle.hpp"
#include "onecut/solver.hpp"

namespace onecut {

struct BenchRow {
    int n = 0;
    int k = 0;
    std::string mode;
    double wall_ms = 0.0;
    long long leaves = 0;
    Weight value = 0;
};

namespace detail {

inline EmbeddedInstance generate_with_retries(GeneratorConfig cfg, int attempts = 64) {
    for (int t = 0; t < attempts; ++t) {
        try {
            return generate_instance(cfg);
        } catch (const GraphError&) {
            cfg.seed += 1000003;  // deterministic reseed
        }
    }
    throw GraphError(GraphError::Kind::Unsatisfiable,
                     "generator config stayed unsatisfiable across retries");
}

}  // namespace detail

/// One timed run per (n, k, repetition, mode) on seeded instances with
/// weights in [0, 10]. Runs stay single-threaded for stable timing. Two hard
/// invariants: leaves never exceed 3^k, and both modes agree on the value.
inline std::vector<BenchRow> sweep(const std::vector<int>& n_list, const std::vector<int>& k_list,
                                   int repetitions, std::uint64_t seed) {
    std::vector<BenchRow> rows;
    Rng master(seed);
    for (int n : n_list)
        for (int k : k_list)
            for (int rep = 0; rep < repetitions; ++rep) {
                GeneratorConfig cfg;
                cfg.node_count = n;
                cfg.crossing_count = k;
                cfg.weight_min = 0;
                cfg.weight_max = 10;
                cfg.seed = master.bits();
                EmbeddedInstance inst = detail::generate_with_retries(cfg);

                long long bound = 1;
                for (int i = 0; i < k; ++i) bound *= 3;
                Weight agreed = 0;
                for (int pass = 0; pass < 2; ++pass) {
                    SolveStats st;
                    auto t0 = std::chrono::steady_clock::now();
                    Cut cut = pass == 0 ? max_cut_nonneg(inst, &st)
                                        : max_cut_general(inst, FixedCutSet{}, &st);
                    auto t1 = std::chrono::steady_clock::now();
                    if (st.leaf_count > bound)
                        throw std::logic_error("leaf count exceeded 3^k");
                    if (pass == 0)
                        agreed = cut.value;
                    else if (cut.value != agreed)
                        throw std::logic_error("mode disagreement on a non-negative instance");
                    BenchRow row;
                    row.n = n;
                    row.k = k;
                    row.mode = pass == 0 ? "nonneg" : "general";
                    row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                    row.leaves = st.leaf_count;
                    row.value = cut.value;
                    rows.push_back(row);
                }
            }
    return rows;
}

inline std::string to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "n,k,mode,wall_ms,leaves,value\n";
    out.setf(std::ios::fixed);
    out.precision(3);
    for (const BenchRow& r : rows)
        out << r.n << ',' << r.k << ',' << r.mode << ',' << r.wall_ms << ',' << r.leaves << ','
            << r.value << '\n';
    return out.str();
}

}  // namespace onecut
