#include "natk/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace natk {

namespace fs = std::filesystem;

CatalogResult catalog_scan(const std::string& dir) {
    fs::path root(dir);
    std::error_code ec;
    if (!fs::is_directory(root, ec))
        fail(ErrorClass::Io, "NotADirectory", dir + " is not a directory");

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_regular_file() && entry.path().extension() == ".nat")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    struct Row {
        std::string name, kind, order, hash, file;
    };
    std::vector<Row> rows;
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) fail(ErrorClass::Io, "FileNotFound", "cannot open " + f.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        NatDocument doc = parse_nat(buf.str(), f.string());
        for (const auto& b : doc.blocks) {
            const std::string* o = b.header("order");
            rows.push_back(Row{b.name, b.kind, o ? *o : "-",
                               to_hex16(fnv1a64(emit_block(b))),
                               f.filename().string()});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.kind, a.name) < std::tie(b.kind, b.name);
    });

    std::ostringstream out;
    out << "name\tkind\torder\thash\tfile\n";
    for (const auto& r : rows)
        out << r.name << '\t' << r.kind << '\t' << r.order << '\t' << r.hash << '\t' << r.file
            << '\n';

    fs::path index = root / "index.tsv";
    fs::path tmp = root / ".index.tsv.tmp";
    {
        std::ofstream o(tmp, std::ios::trunc);
        if (!o) fail(ErrorClass::Io, "WriteFailed", "cannot write " + tmp.string());
        o << out.str();
    }
    fs::rename(tmp, index, ec);
    if (ec) fail(ErrorClass::Io, "WriteFailed", "cannot replace " + index.string());

    return CatalogResult{files.size(), rows.size(), index.string()};
}

}  // namespace natk
