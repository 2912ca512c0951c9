#pragma once

#include "natk/fixtures.hpp"

namespace natk {
namespace suites {

struct CheckLine {
    std::string name;
    bool ok = false;
    std::string info;
};

struct SuiteResult {
    std::string name;
    bool ok = true;
    std::vector<CheckLine> lines;
    double elapsed_ms = 0;

    void check(std::string line, bool line_ok, std::string info = "") {
        ok = ok && line_ok;
        lines.push_back(CheckLine{std::move(line), line_ok, std::move(info)});
    }
};

/// The #-construction battery: the Z/2, n=1 distinguished instance and the
/// two iff laws over Z/2, Z/3, Z/4, Z/6 with n = 1..3, both directions
/// checked against direct law scans.
SuiteResult hash_suite();

/// The Z/9 battery: transported addition, the mixed product module, its
/// module decision and its near-vector-space failure witness.
SuiteResult z9_suite();

/// Backtracking enumeration versus the row-permutation oracle on every
/// corpus monoid of order <= 4.
SuiteResult enumeration_suite();

/// The order-9 near-field battery: classification, multiplicative order
/// census, near-vector-space checks, submodule quasi-kernel generation.
SuiteResult dickson_suite();

/// Near-field => (FA) => (SA)/(S1) implications over every near-ring the
/// other batteries produce, including enumerated ones.
SuiteResult lema_suite();

/// Submodules, quotients and pairwise products of the three distinguished
/// module families, all run through the module decision.
SuiteResult closure_suite();

/// The maximal-set decision versus the powerset oracle: exhaustive over M2
/// modules with |V| <= 6, plus seeded random M3 modules with |V| <= 8.
SuiteResult qstar_oracle_suite(std::uint64_t seed);

/// Single designated ring: the module decision versus the direct
/// distributivity scan on the same corpus.
SuiteResult single_ring_suite(std::uint64_t seed);

/// Scalar-group fixtures with fully enumerated designated sets: the
/// near-vector-space test against the module decision, the subspace
/// equivalences, and decomposition certificates against an independent
/// search for minimal presentation lengths.
SuiteResult andremodule_tfae_suite();

/// Seeded random morphisms between distinguished module families: kernels
/// and cokernels stay within the class, and |dom| = |ker| * |im|.
SuiteResult factorization_suite(std::uint64_t seed);

std::vector<std::string> all_suite_names();

/// Runs the named suites ("all" expands to every suite).
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, std::uint64_t seed);

/// Random valid modules over the GF(3) monoid on abelian groups of order
/// <= max_order.
std::vector<ModulePtr> random_m3_modules(Rng& rng, std::size_t count, std::size_t max_order);

/// Random valid morphisms between modules of the pool (same monoid pairs).
std::vector<ModuleMorphism> random_morphisms(Rng& rng, const std::vector<ModulePtr>& pool,
                                             std::size_t count);

/// Independent minimal-presentation-length search (iterative deepening over
/// quasi-kernel multisets), used to cross-check the BFS layering.
std::size_t mv_oracle(const MModule& v, const ElementSet& qv, Idx target,
                      std::size_t max_len = 8);

}  // namespace suites
}  // namespace natk
