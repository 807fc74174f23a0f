#pragma once

#include <string>

#include "sposet/poset.hpp"

namespace sposet {

// Poset file format. Primary form:
//   {"name": str, "n_vertices": int,
//    "faces": [{"id": str, "covers": [str,...], "vertex": int?}, ...]}
// The bottom is implicit; faces with "covers": [] are atoms and must
// declare "vertex" (1-based). A second accepted form describes a plain
// simplicial complex by its facets and is expanded to the face poset:
//   {"name": str?, "facets": [[int,...],...]}
SimplicialPoset load_poset_json(const std::string& text);
SimplicialPoset load_poset_file(const std::string& path);

// Emits the primary form; loading the result reproduces the poset.
std::string poset_to_json(const SimplicialPoset& p, bool pretty = false);
void save_poset_file(const SimplicialPoset& p, const std::string& path, bool pretty = false);

// Face poset of a simplicial complex given by facets (1-based vertices).
SimplicialPoset complex_from_facets(const std::string& name,
                                    const std::vector<std::vector<int>>& facets);

}  // namespace sposet
