#pragma once

#include <array>
#include <memory>
#include <utility>

#include "natk/core.hpp"

namespace natk {

/// A finite module over a monoid: an abelian group together with an action
/// table act[a][v] = a*v satisfying (ab)*v = a*(b*v), 1*v = v and
/// a*(u+v) = a*u + a*v.
struct MModule {
    MonoidPtr monoid;
    FiniteAbelianGroup group;
    std::vector<Idx> act;  // |M| x |V|, row-major by monoid element
    std::vector<std::string> labels;

    std::size_t order() const { return group.order; }
    Idx scale(Idx a, Idx v) const { return act[static_cast<std::size_t>(a) * group.order + v]; }
    Idx add(Idx u, Idx v) const { return group.at(u, v); }
    Idx neg(Idx v) const { return group.neg[v]; }
    Idx zero() const { return group.zero; }
    const std::string& label(Idx v) const { return labels[v]; }
};

using ModulePtr = std::shared_ptr<const MModule>;

/// A submodule is carried by a subset of the ambient module; it contains
/// zero and is closed under addition, negation and the action.
struct Submodule {
    ElementSet carrier;
};

struct ModuleMorphism {
    ModulePtr dom, cod;
    std::vector<Idx> map;  // length |dom|
};

struct ActionPropertyReport {
    enum class Status { Holds, Fails, NotApplicable };

    bool fa = false;
    std::optional<std::array<Idx, 3>> fa_witness;  // (alpha, beta, v)
    Status sa = Status::NotApplicable;
    std::optional<Idx> sa_witness;
};

/// Validates an action table against the module identities. Throws:
/// BadShape, NotUnital(v), NotAction(a,b,v), NotEndomorphism(a,u,v).
ModulePtr validate_module(MonoidPtr monoid, FiniteAbelianGroup group, std::vector<Idx> act,
                          std::vector<std::string> labels = {});

/// M*S = { a*s : a in M, s in S }.
ElementSet orbit(const MModule& v, const ElementSet& s);

/// Smallest subgroup of the carrier containing S.
ElementSet group_closure(const MModule& v, const ElementSet& s);

/// Extends the subgroup `base` by one further generator g.
ElementSet subgroup_extend(const FiniteAbelianGroup& g, const ElementSet& base, Idx gen);

/// Smallest submodule containing S: the group closure of the orbit of S.
Submodule generated_submodule(const MModule& v, const ElementSet& s);

bool is_submodule(const MModule& v, const ElementSet& s);

/// All submodules, sorted by (size, carrier). Walks the submodule lattice by
/// extending generator sets; matches the powerset scan for small modules.
std::vector<Submodule> enumerate_submodules(const MModule& v, std::size_t bound = 4096);

struct QuotientResult {
    ModulePtr module_;          // carrier = canonical coset representatives
    ModuleMorphism projection;  // ambient -> quotient
    std::vector<Idx> reps;      // class index -> representative in the ambient module
};

/// Quotient by a certified submodule; coset representatives are the minimal
/// element indices, classes are numbered by ascending representative.
QuotientResult quotient(ModulePtr v, const Submodule& w);

/// Componentwise product; the empty product is the one-element module.
/// Element order is mixed-radix with the leftmost factor most significant.
ModulePtr product(MonoidPtr monoid, const std::vector<ModulePtr>& factors,
                  std::size_t bound = kMaxOrder);

ModulePtr one_element_module(MonoidPtr monoid);

/// The submodule as a standalone module (carrier reindexed ascending),
/// together with the inclusion morphism.
struct InducedSubmodule {
    ModulePtr module_;
    ModuleMorphism inclusion;
    std::vector<Idx> elements;  // new index -> ambient index
};
InducedSubmodule submodule_as_module(ModulePtr v, const Submodule& w);

/// Validates a map table as a module morphism. Throws: MixedMonoids,
/// BadShape, NotAdditive(u,v), NotEquivariant(a,v).
ModuleMorphism make_morphism(ModulePtr dom, ModulePtr cod, std::vector<Idx> map);

struct Factorization {
    Submodule kernel;  // of dom
    Submodule image;   // of cod
    ModulePtr cokernel;
    ModuleMorphism cokernel_projection;  // cod -> cokernel
};

/// Kernel, image and cokernel of a certified morphism.
Factorization factorize(const ModuleMorphism& f);

/// (FA): a*v = b*v with a != b forces v = 0. (SA): 0*v = 0 and (-1)*v = -v;
/// reported NotApplicable when the monoid lacks zero or -1.
ActionPropertyReport check_action_properties(const MModule& v, int threads = 1);

}  // namespace natk
