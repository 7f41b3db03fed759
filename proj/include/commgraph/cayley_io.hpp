#pragma once

// Cayley-table text format:
//   n
//   n rows of n integers in [0, n)    (row i = products g_i * g_j)
//   # name: <label>                   (optional)
// The identity may sit at any index; ingestion moves it to 0.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "commgraph/families.hpp"
#include "commgraph/group.hpp"

namespace commgraph {

/// Throws ParseError, GroupAxiomError or OrderCapExceeded.
FiniteGroup ingest_cayley(std::istream& in, const std::string& default_label, const BuildOptions& opts = {});
FiniteGroup ingest_cayley_file(const std::filesystem::path& path, const BuildOptions& opts = {});

void write_cayley(std::ostream& out, const FiniteGroup& g);

}  // namespace commgraph
