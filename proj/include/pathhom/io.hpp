#ifndef PATHHOM_IO_HPP
#define PATHHOM_IO_HPP

#include <string>

#include "pathhom/chain.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/homology.hpp"
#include "pathhom/homotopy.hpp"
#include "pathhom/minimal.hpp"
#include "pathhom/products.hpp"

namespace pathhom {

// Text format: '#' comments, `digraph <name>`, `vertex <id>`, `<u> -> <v>`.
// JSON: {"name": ..., "vertices": [...], "edges": [["u","v"], ...]}.
// Format chosen by extension (.json vs anything else).
Digraph load_digraph(const std::string& path);
Digraph parse_digraph_text(const std::string& body, const std::string& fallback_name);
Digraph parse_digraph_json(const std::string& body);
std::string digraph_to_text(const Digraph& g);
std::string digraph_to_json(const Digraph& g);

// Chain text: optional `dim=<n>` token, then signed coefficient and
// bracketed vertex list repeated: `+1 [0 1 3 7] -1 [0 2 3 7]`.
// JSON: {"dim": n, "terms": [{"c": "...", "path": [...]}]}; forms carry
// "form": true and rational coefficient strings.
Chain load_chain(const std::string& path, const Digraph& g);
Form load_form(const std::string& path, const Digraph& g);
Chain parse_chain_text(const std::string& body, const Digraph* g);
std::string chain_to_text(const Chain& c);
std::string chain_to_text(const QChain& c);
std::string chain_to_json(const Chain& c);
std::string form_to_json(const Form& f);

// VertexMap file: lines `<src> => <dst>`, '#' comments.
VertexMap load_vertex_map(const std::string& path, const Digraph& source, const Digraph& target);

// Homotopy file: `line <orientation string>` then, per step k in 0..n, a
// `step <k>` header followed by one `<src> => <dst>` block.
HomotopyWitness load_homotopy(const std::string& path, const Digraph& source,
                              const Digraph& target);

std::string homology_report_json(const HomologyResult& h);
std::string structure_report_json(const StructureReport& r);
std::string skew_report_json(const SkewReport& r);
std::string mv_report_json(const MVReport& r);

std::string read_file(const std::string& path);  // InputError if unreadable

}  // namespace pathhom

#endif
