#pragma once

#include <map>
#include <variant>

#include "natk/andre.hpp"

namespace natk {

/// One named table within a block: "table:", "add:", "act:", "map:" or
/// "adds <k>:" followed by rows of whitespace-separated indices.
struct RawTable {
    std::string tag;
    std::size_t count = 1;  // number of stacked tables, for "adds <k>:"
    std::vector<std::vector<Idx>> rows;
};

/// "@<kind> <name>", header lines, then one or more tables. Comments start
/// with '#'; blank lines separate blocks.
struct RawBlock {
    std::string kind;
    std::string name;
    std::vector<std::pair<std::string, std::string>> headers;
    std::vector<RawTable> tables;
    int line = 0;

    const std::string* header(const std::string& key) const {
        for (const auto& [k, v] : headers)
            if (k == key) return &v;
        return nullptr;
    }
    const RawTable* table(const std::string& tag) const {
        for (const auto& t : tables)
            if (t.tag == tag) return &t;
        return nullptr;
    }
};

struct NatDocument {
    std::string path;
    std::vector<RawBlock> blocks;

    const RawBlock* block(const std::string& name) const {
        for (const auto& b : blocks)
            if (b.name == name) return &b;
        return nullptr;
    }
};

/// Parses document text. Throws SyntaxError with the offending line number.
NatDocument parse_nat(std::string_view text, std::string path = "<memory>");

/// Canonical emission: declaration order, single spaces, one blank line
/// between blocks, trailing newline. parse(emit(d)) reproduces d exactly.
std::string emit_nat(const NatDocument& doc);
std::string emit_block(const RawBlock& block);

using MorphismPtr = std::shared_ptr<const ModuleMorphism>;
using MnrPtr = std::shared_ptr<const MultiNearRing>;
using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;

using Value = std::variant<MonoidPtr, GroupPtr, NearRingPtr, ModulePtr, MnrPtr, MorphismPtr>;

/// Loads, caches and lazily validates .nat documents; resolves
/// "file.nat:Name" references (bare names resolve within the referring
/// document).
class Session {
public:
    /// Parse (and cache) a document; block validation stays lazy.
    const NatDocument& document(const std::string& path);

    /// Parse and validate every block; returns the number of blocks.
    std::size_t load_all(const std::string& path);

    /// Resolve a reference of the form "file.nat:Name". Throws
    /// UnresolvedReference / SyntaxError / validation errors from builders.
    Value value(const std::string& ref, const std::string& base_dir = ".");

    MonoidPtr monoid(const std::string& ref, const std::string& base_dir = ".");
    /// Monoid of whatever the reference names (monoid, near-ring or module).
    MonoidPtr monoid_of(const std::string& ref, const std::string& base_dir = ".");
    GroupPtr group(const std::string& ref, const std::string& base_dir = ".");
    NearRingPtr nearring(const std::string& ref, const std::string& base_dir = ".");
    /// Module, coercing a near-ring reference to its self-module.
    ModulePtr module_of(const std::string& ref, const std::string& base_dir = ".");
    MnrPtr multinearring(const std::string& ref, const std::string& base_dir = ".");
    MorphismPtr morphism(const std::string& ref, const std::string& base_dir = ".");

private:
    Value build(const std::string& path, const RawBlock& block);
    Value& cached(const std::string& path, const std::string& name);

    std::map<std::string, NatDocument> docs_;
    std::map<std::string, Value> values_;   // "path\x1fname"
    std::map<std::string, bool> building_;  // cycle guard
};

/// Canonical block emitters for constructed structures.
RawBlock block_of_monoid(const std::string& name, const FiniteMonoid& m);
RawBlock block_of_group(const std::string& name, const FiniteAbelianGroup& g);
RawBlock block_of_nearring(const std::string& name, const std::string& monoid_ref,
                           const NearRing& n);
RawBlock block_of_module(const std::string& name, const std::string& monoid_ref,
                         const MModule& v);
RawBlock block_of_multinearring(const std::string& name, const std::string& monoid_ref,
                                const MultiNearRing& r);
RawBlock block_of_morphism(const std::string& name, const std::string& dom_ref,
                           const std::string& cod_ref, const ModuleMorphism& f);

}  // namespace natk
