#pragma once

#include <vector>

#include "sposet/poset.hpp"

namespace sposet::fixtures {

// Bundled corpus. The same posets ship as JSON under fixtures/; the
// builders here keep the CLI selftest independent of the working directory.

SimplicialPoset pt();            // single vertex
SimplicialPoset sphere0();       // boundary of a segment: two points
SimplicialPoset digon();         // two vertices joined by two parallel edges
SimplicialPoset cone();          // two triangles glued along two edges
SimplicialPoset sphere1();       // boundary of a triangle
SimplicialPoset sphere2();       // boundary of a tetrahedron
SimplicialPoset square();        // 4-cycle graph
SimplicialPoset bowtie();        // two triangles sharing a vertex
SimplicialPoset edge_vertex();   // an edge plus an isolated vertex
SimplicialPoset pinched_disk();  // two triangles sharing an edge, third hanging off a vertex

// all of the above
std::vector<SimplicialPoset> corpus();

// the subset small enough for exhaustive Ext sweeps (n <= 4, at most 12
// faces above the bottom)
std::vector<SimplicialPoset> sweep_corpus();

}  // namespace sposet::fixtures
