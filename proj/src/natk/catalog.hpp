#pragma once

#include "natk/natfile.hpp"

namespace natk {

struct CatalogResult {
    std::size_t files = 0;
    std::size_t blocks = 0;
    std::string index_path;
};

/// Scans a directory's .nat files and (re)writes <dir>/index.tsv with one row
/// per block: name, kind, order, content hash of the canonical block text,
/// and source file. Rows are sorted by (kind, name); the write is atomic
/// (temp file + rename) and reruns are byte-identical.
CatalogResult catalog_scan(const std::string& dir);

}  // namespace natk
