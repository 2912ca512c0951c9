// Regenerates the shipped .nat fixture files from the built-in structures.
// Usage: make_fixtures [output-dir]   (default: fixtures)

#include <filesystem>
#include <fstream>
#include <iostream>

#include "natk/fixtures.hpp"
#include "natk/natfile.hpp"

using namespace natk;

namespace {

void write_doc(const std::filesystem::path& dir, const std::string& name,
               const NatDocument& doc) {
    std::filesystem::path p = dir / name;
    std::ofstream out(p, std::ios::trunc);
    if (!out) {
        std::cerr << "cannot write " << p << "\n";
        std::exit(1);
    }
    out << emit_nat(doc);
    std::cout << p.string() << "\n";
}

NatDocument m2_doc() {
    NatDocument doc;
    doc.blocks.push_back(block_of_monoid("M", *fixtures::m2()));
    doc.blocks.push_back(block_of_nearring("F2", "M", *fixtures::ring_zmod(2)));
    doc.blocks.push_back(block_of_module("Z4", "M", *fixtures::z4_over_m2()));
    doc.blocks.push_back(block_of_module("K4", "M", *fixtures::gf2_power(2)));
    return doc;
}

NatDocument m3_doc() {
    NatDocument doc;
    doc.blocks.push_back(block_of_monoid("M", *fixtures::m3()));
    doc.blocks.push_back(block_of_nearring("F3", "M", *fixtures::ring_zmod(3)));
    doc.blocks.push_back(block_of_module("P1", "M", *fixtures::gf3_power(1)));
    doc.blocks.push_back(block_of_module("P2", "M", *fixtures::gf3_power(2)));
    doc.blocks.push_back(block_of_module("P3", "M", *fixtures::gf3_power(3)));
    ModulePtr p2 = fixtures::gf3_power(2);
    ModulePtr p1 = fixtures::gf3_power(1);
    std::vector<Idx> map(p2->order());
    for (std::size_t v = 0; v < p2->order(); ++v) map[v] = static_cast<Idx>(v / 3);
    doc.blocks.push_back(
        block_of_morphism("proj21", "P2", "P1", make_morphism(p2, p1, std::move(map))));
    return doc;
}

NatDocument z9_doc() {
    NatDocument doc;
    MultiNearRing r = fixtures::z9_multi();
    doc.blocks.push_back(block_of_monoid("M", *r.monoid));
    doc.blocks.push_back(block_of_nearring("Nplus", "M", *r.designated[0]));
    doc.blocks.push_back(block_of_nearring("Nphi", "M", *r.designated[1]));
    doc.blocks.push_back(block_of_multinearring("R", "M", r));
    doc.blocks.push_back(block_of_module("V", "M", *fixtures::z9_product_module()));
    return doc;
}

NatDocument dickson_doc() {
    NatDocument doc;
    NearRingPtr j = dickson_fixture();
    doc.blocks.push_back(block_of_monoid("M", *j->monoid));
    doc.blocks.push_back(block_of_nearring("J", "M", *j));
    doc.blocks.push_back(block_of_module("J2", "M", *fixtures::dickson_square()));
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    write_doc(dir, "m2.nat", m2_doc());
    write_doc(dir, "m3.nat", m3_doc());
    write_doc(dir, "z9.nat", z9_doc());
    write_doc(dir, "dickson.nat", dickson_doc());
    return 0;
}
