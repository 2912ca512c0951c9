#include "natk/natfile.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace natk {

namespace {

namespace fs = std::filesystem;

[[noreturn]] void syntax_error(const std::string& path, int line, const std::string& msg) {
    fail(ErrorClass::Parse, "SyntaxError", path + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

bool is_table_tag(const std::vector<std::string>& toks) {
    if (toks.empty()) return false;
    const std::string& t = toks[0];
    if (t == "table:" || t == "add:" || t == "act:" || t == "map:") return toks.size() == 1;
    if (t == "adds") return toks.size() == 2 && !toks[1].empty() && toks[1].back() == ':';
    return false;
}

bool all_numeric(const std::vector<std::string>& toks) {
    if (toks.empty()) return false;
    for (const auto& t : toks)
        for (char c : t)
            if (c < '0' || c > '9') return false;
    return true;
}

const std::set<std::string> kKinds = {"monoid", "group",          "nearring",
                                      "module", "multinearring",  "morphism"};

}  // namespace

NatDocument parse_nat(std::string_view text, std::string path) {
    NatDocument doc;
    doc.path = std::move(path);

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    RawBlock* block = nullptr;
    RawTable* table = nullptr;
    std::set<std::string> names;

    while (std::getline(in, raw)) {
        ++lineno;
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
        auto toks = tokens_of(raw);
        if (toks.empty()) continue;

        if (toks[0].size() > 1 && toks[0][0] == '@') {
            std::string kind = toks[0].substr(1);
            if (!kKinds.count(kind)) syntax_error(doc.path, lineno, "unknown block kind " + kind);
            if (toks.size() != 2) syntax_error(doc.path, lineno, "expected '@kind name'");
            if (!names.insert(toks[1]).second)
                syntax_error(doc.path, lineno, "duplicate block name " + toks[1]);
            doc.blocks.push_back(RawBlock{kind, toks[1], {}, {}, lineno});
            block = &doc.blocks.back();
            table = nullptr;
            continue;
        }
        if (!block) syntax_error(doc.path, lineno, "content before the first block");

        if (is_table_tag(toks)) {
            RawTable t;
            if (toks[0] == "adds") {
                t.tag = "adds";
                std::string k = toks[1].substr(0, toks[1].size() - 1);
                t.count = 0;
                for (char c : k) {
                    if (c < '0' || c > '9')
                        syntax_error(doc.path, lineno, "bad table count in 'adds'");
                    t.count = t.count * 10 + static_cast<std::size_t>(c - '0');
                }
                if (t.count == 0) syntax_error(doc.path, lineno, "'adds 0:' is not allowed");
            } else {
                t.tag = toks[0].substr(0, toks[0].size() - 1);
            }
            block->tables.push_back(std::move(t));
            table = &block->tables.back();
            continue;
        }

        if (all_numeric(toks)) {
            if (!table) syntax_error(doc.path, lineno, "table row outside a table");
            std::vector<Idx> row;
            row.reserve(toks.size());
            for (const auto& t : toks) {
                unsigned long v = std::stoul(t);
                if (v >= kMaxOrder) syntax_error(doc.path, lineno, "index too large");
                row.push_back(static_cast<Idx>(v));
            }
            table->rows.push_back(std::move(row));
            continue;
        }

        // Header line: key then value tokens.
        if (table) syntax_error(doc.path, lineno, "header after tables");
        std::string key = toks[0];
        std::string value;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            if (i > 1) value += ' ';
            value += toks[i];
        }
        if (value.empty()) syntax_error(doc.path, lineno, "header '" + key + "' needs a value");
        block->headers.emplace_back(std::move(key), std::move(value));
    }

    for (const auto& b : doc.blocks)
        if (b.tables.empty())
            syntax_error(doc.path, b.line, "block " + b.name + " has no tables");
    return doc;
}

std::string emit_block(const RawBlock& b) {
    std::ostringstream out;
    out << '@' << b.kind << ' ' << b.name << '\n';
    for (const auto& [k, v] : b.headers) out << k << ' ' << v << '\n';
    for (const auto& t : b.tables) {
        if (t.tag == "adds")
            out << "adds " << t.count << ":\n";
        else
            out << t.tag << ":\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out << ' ';
                out << row[i];
            }
            out << '\n';
        }
    }
    return out.str();
}

std::string emit_nat(const NatDocument& doc) {
    std::string out;
    for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
        if (i) out += '\n';
        out += emit_block(doc.blocks[i]);
    }
    return out;
}

namespace {

std::vector<Idx> flatten(const RawTable& t, std::size_t rows, std::size_t cols,
                         const std::string& path, int line, const std::string& what) {
    if (t.rows.size() != rows)
        fail(ErrorClass::Parse, "SyntaxError",
             path + ":" + std::to_string(line) + ": " + what + " expects " +
                 std::to_string(rows) + " rows, got " + std::to_string(t.rows.size()));
    std::vector<Idx> flat;
    flat.reserve(rows * cols);
    for (const auto& row : t.rows) {
        if (row.size() != cols)
            fail(ErrorClass::Parse, "SyntaxError",
                 path + ":" + std::to_string(line) + ": " + what + " expects rows of " +
                     std::to_string(cols) + " entries");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
}

std::size_t order_of(const RawBlock& b, const std::string& path) {
    const std::string* o = b.header("order");
    if (!o)
        fail(ErrorClass::Parse, "SyntaxError",
             path + ":" + std::to_string(b.line) + ": block needs an 'order' header");
    return std::stoul(*o);
}

}  // namespace

const NatDocument& Session::document(const std::string& path) {
    fs::path p = fs::path(path);
    std::string key = fs::weakly_canonical(p).string();
    auto it = docs_.find(key);
    if (it != docs_.end()) return it->second;

    std::ifstream in(p);
    if (!in)
        fail(ErrorClass::Io, "FileNotFound", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    NatDocument doc = parse_nat(buf.str(), key);
    return docs_.emplace(key, std::move(doc)).first->second;
}

std::size_t Session::load_all(const std::string& path) {
    const NatDocument& doc = document(path);
    for (const auto& b : doc.blocks) cached(doc.path, b.name);
    return doc.blocks.size();
}

Value& Session::cached(const std::string& path, const std::string& name) {
    std::string key = path + '\x1f' + name;
    auto it = values_.find(key);
    if (it != values_.end()) return it->second;
    if (building_[key])
        fail(ErrorClass::Parse, "UnresolvedReference",
             "cyclic reference through " + name + " in " + path);
    const NatDocument& doc = docs_.at(path);
    const RawBlock* b = doc.block(name);
    if (!b)
        fail(ErrorClass::Parse, "UnresolvedReference", "no block named " + name + " in " + path);
    building_[key] = true;
    Value v = build(path, *b);
    building_[key] = false;
    return values_.emplace(key, std::move(v)).first->second;
}

Value Session::value(const std::string& ref, const std::string& base_dir) {
    auto pos = ref.rfind(':');
    std::string path, name;
    if (pos == std::string::npos)
        fail(ErrorClass::Usage, "UnresolvedReference",
             "expected a 'file.nat:Name' reference, got '" + ref + "'");
    path = ref.substr(0, pos);
    name = ref.substr(pos + 1);
    fs::path p(path);
    if (p.is_relative()) p = fs::path(base_dir) / p;
    const NatDocument& doc = document(p.string());
    return cached(doc.path, name);
}

Value Session::build(const std::string& path, const RawBlock& b) {
    std::string dir = fs::path(path).parent_path().string();
    if (dir.empty()) dir = ".";

    auto local = [&](const std::string& ref) -> Value {
        if (ref.find(':') == std::string::npos) return cached(path, ref);
        return value(ref, dir);
    };
    auto need = [&](const char* key) -> const std::string& {
        const std::string* h = b.header(key);
        if (!h)
            fail(ErrorClass::Parse, "SyntaxError",
                 path + ":" + std::to_string(b.line) + ": block needs a '" +
                     std::string(key) + "' header");
        return *h;
    };
    auto need_table = [&](const char* tag) -> const RawTable& {
        const RawTable* t = b.table(tag);
        if (!t)
            fail(ErrorClass::Parse, "SyntaxError",
                 path + ":" + std::to_string(b.line) + ": block needs a '" + std::string(tag) +
                     ":' table");
        return *t;
    };

    if (b.kind == "monoid") {
        std::size_t n = order_of(b, path);
        std::vector<std::string> labels;
        if (const std::string* l = b.header("labels")) labels = tokens_of(*l);
        auto flat = flatten(need_table("table"), n, n, path, b.line, "monoid table");
        MonoidPtr m = make_monoid(n, std::move(labels), std::move(flat));
        // User annotations are cross-checked against the detected elements.
        if (const std::string* z = b.header("zero")) {
            if (!m->zero || *m->zero != std::stoul(*z))
                fail_validation("AnnotationMismatch",
                                path + ": declared zero disagrees with the detected one");
        }
        if (const std::string* mo = b.header("minus-one")) {
            if (!m->minus_one || *m->minus_one != std::stoul(*mo))
                fail_validation("AnnotationMismatch",
                                path + ": declared minus-one disagrees with the detected one");
        }
        return m;
    }
    if (b.kind == "group") {
        std::size_t n = order_of(b, path);
        auto flat = flatten(need_table("add"), n, n, path, b.line, "group table");
        return std::make_shared<const FiniteAbelianGroup>(
            validate_abelian_group(n, std::move(flat)));
    }
    if (b.kind == "nearring") {
        MonoidPtr m = std::get<MonoidPtr>(local(need("monoid")));
        std::size_t n = order_of(b, path);
        if (n != m->order)
            fail(ErrorClass::Parse, "SyntaxError",
                 path + ": nearring order disagrees with its monoid");
        auto flat = flatten(need_table("add"), n, n, path, b.line, "nearring addition");
        return validate_nearring(std::move(m), std::move(flat));
    }
    if (b.kind == "module") {
        MonoidPtr m = std::get<MonoidPtr>(local(need("monoid")));
        std::size_t n = order_of(b, path);
        auto add = flatten(need_table("add"), n, n, path, b.line, "module addition");
        auto act = flatten(need_table("act"), m->order, n, path, b.line, "module action");
        std::vector<std::string> labels;
        if (const std::string* l = b.header("labels")) labels = tokens_of(*l);
        return validate_module(std::move(m), validate_abelian_group(n, std::move(add)),
                               std::move(act), std::move(labels));
    }
    if (b.kind == "multinearring") {
        MonoidPtr m = std::get<MonoidPtr>(local(need("monoid")));
        std::size_t n = order_of(b, path);
        if (n != m->order)
            fail(ErrorClass::Parse, "SyntaxError",
                 path + ": multinearring order disagrees with its monoid");
        const RawTable& t = need_table("adds");
        auto flat = flatten(t, t.count * n, n, path, b.line, "designated additions");
        std::vector<NearRingPtr> designated;
        for (std::size_t i = 0; i < t.count; ++i) {
            std::vector<Idx> one(flat.begin() + static_cast<long>(i * n * n),
                                 flat.begin() + static_cast<long>((i + 1) * n * n));
            designated.push_back(validate_nearring(m, std::move(one)));
        }
        return std::make_shared<const MultiNearRing>(
            make_multi_nearring(std::move(m), std::move(designated)));
    }
    if (b.kind == "morphism") {
        Value dv = local(need("dom")), cv = local(need("cod"));
        auto as_mod = [&](Value& v) -> ModulePtr {
            if (auto* mp = std::get_if<ModulePtr>(&v)) return *mp;
            if (auto* np = std::get_if<NearRingPtr>(&v)) return as_module(**np);
            fail(ErrorClass::Parse, "UnresolvedReference",
                 path + ": morphism endpoints must be modules");
        };
        ModulePtr dom = as_mod(dv), cod = as_mod(cv);
        auto flat = flatten(need_table("map"), 1, dom->order(), path, b.line, "morphism map");
        return std::make_shared<const ModuleMorphism>(
            make_morphism(std::move(dom), std::move(cod), std::move(flat)));
    }
    fail(ErrorClass::Parse, "SyntaxError", path + ": unknown block kind " + b.kind);
}

MonoidPtr Session::monoid(const std::string& ref, const std::string& base_dir) {
    Value v = value(ref, base_dir);
    if (auto* m = std::get_if<MonoidPtr>(&v)) return *m;
    fail(ErrorClass::Usage, "UnresolvedReference", ref + " is not a monoid");
}

MonoidPtr Session::monoid_of(const std::string& ref, const std::string& base_dir) {
    Value v = value(ref, base_dir);
    if (auto* m = std::get_if<MonoidPtr>(&v)) return *m;
    if (auto* n = std::get_if<NearRingPtr>(&v)) return (*n)->monoid;
    if (auto* mod = std::get_if<ModulePtr>(&v)) return (*mod)->monoid;
    if (auto* r = std::get_if<MnrPtr>(&v)) return (*r)->monoid;
    fail(ErrorClass::Usage, "UnresolvedReference", ref + " has no underlying monoid");
}

GroupPtr Session::group(const std::string& ref, const std::string& base_dir) {
    Value v = value(ref, base_dir);
    if (auto* g = std::get_if<GroupPtr>(&v)) return *g;
    if (auto* n = std::get_if<NearRingPtr>(&v))
        return std::make_shared<const FiniteAbelianGroup>((*n)->add);
    fail(ErrorClass::Usage, "UnresolvedReference", ref + " is not a group");
}

NearRingPtr Session::nearring(const std::string& ref, const std::string& base_dir) {
    Value v = value(ref, base_dir);
    if (auto* n = std::get_if<NearRingPtr>(&v)) return *n;
    fail(ErrorClass::Usage, "UnresolvedReference", ref + " is not a near-ring");
}

ModulePtr Session::module_of(const std::string& ref, const std::string& base_dir) {
    Value v = value(ref, base_dir);
    if (auto* m = std::get_if<ModulePtr>(&v)) return *m;
    if (auto* n = std::get_if<NearRingPtr>(&v)) return as_module(**n);
    fail(ErrorClass::Usage, "UnresolvedReference", ref + " is not a module");
}

MnrPtr Session::multinearring(const std::string& ref, const std::string& base_dir) {
    Value v = value(ref, base_dir);
    if (auto* r = std::get_if<MnrPtr>(&v)) return *r;
    fail(ErrorClass::Usage, "UnresolvedReference", ref + " is not a multi-near-ring");
}

MorphismPtr Session::morphism(const std::string& ref, const std::string& base_dir) {
    Value v = value(ref, base_dir);
    if (auto* f = std::get_if<MorphismPtr>(&v)) return *f;
    fail(ErrorClass::Usage, "UnresolvedReference", ref + " is not a morphism");
}

namespace {

void push_square_table(RawBlock& b, const std::string& tag, const std::vector<Idx>& flat,
                       std::size_t rows, std::size_t cols) {
    RawTable t;
    t.tag = tag;
    t.rows.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r)
        t.rows.emplace_back(flat.begin() + static_cast<long>(r * cols),
                            flat.begin() + static_cast<long>((r + 1) * cols));
    b.tables.push_back(std::move(t));
}

bool emitable_labels(const std::vector<std::string>& labels) {
    for (const auto& l : labels) {
        if (l.empty()) return false;
        for (char c : l)
            if (c == ' ' || c == '\t' || c == '#') return false;
    }
    return true;
}

void maybe_emit_labels(RawBlock& b, const std::vector<std::string>& labels) {
    if (labels == default_labels(labels.size()) || !emitable_labels(labels)) return;
    std::string joined;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) joined += ' ';
        joined += labels[i];
    }
    b.headers.emplace_back("labels", std::move(joined));
}

}  // namespace

RawBlock block_of_monoid(const std::string& name, const FiniteMonoid& m) {
    RawBlock b{"monoid", name, {}, {}, 0};
    b.headers.emplace_back("order", std::to_string(m.order));
    maybe_emit_labels(b, m.labels);
    push_square_table(b, "table", m.mul, m.order, m.order);
    return b;
}

RawBlock block_of_group(const std::string& name, const FiniteAbelianGroup& g) {
    RawBlock b{"group", name, {}, {}, 0};
    b.headers.emplace_back("order", std::to_string(g.order));
    push_square_table(b, "add", g.add, g.order, g.order);
    return b;
}

RawBlock block_of_nearring(const std::string& name, const std::string& monoid_ref,
                           const NearRing& n) {
    RawBlock b{"nearring", name, {}, {}, 0};
    b.headers.emplace_back("monoid", monoid_ref);
    b.headers.emplace_back("order", std::to_string(n.order()));
    push_square_table(b, "add", n.add.add, n.order(), n.order());
    return b;
}

RawBlock block_of_module(const std::string& name, const std::string& monoid_ref,
                         const MModule& v) {
    RawBlock b{"module", name, {}, {}, 0};
    b.headers.emplace_back("monoid", monoid_ref);
    b.headers.emplace_back("order", std::to_string(v.order()));
    maybe_emit_labels(b, v.labels);
    push_square_table(b, "add", v.group.add, v.order(), v.order());
    push_square_table(b, "act", v.act, v.monoid->order, v.order());
    return b;
}

RawBlock block_of_multinearring(const std::string& name, const std::string& monoid_ref,
                                const MultiNearRing& r) {
    RawBlock b{"multinearring", name, {}, {}, 0};
    b.headers.emplace_back("monoid", monoid_ref);
    b.headers.emplace_back("order", std::to_string(r.monoid->order));
    RawTable t;
    t.tag = "adds";
    t.count = r.designated.size();
    for (const auto& n : r.designated)
        for (std::size_t row = 0; row < n->order(); ++row)
            t.rows.emplace_back(n->add.add.begin() + static_cast<long>(row * n->order()),
                                n->add.add.begin() + static_cast<long>((row + 1) * n->order()));
    b.tables.push_back(std::move(t));
    return b;
}

RawBlock block_of_morphism(const std::string& name, const std::string& dom_ref,
                           const std::string& cod_ref, const ModuleMorphism& f) {
    RawBlock b{"morphism", name, {}, {}, 0};
    b.headers.emplace_back("dom", dom_ref);
    b.headers.emplace_back("cod", cod_ref);
    RawTable t;
    t.tag = "map";
    t.rows.push_back(f.map);
    b.tables.push_back(std::move(t));
    return b;
}

}  // namespace natk
