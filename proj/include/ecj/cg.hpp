#pragma once

#include <map>
#include <vector>

#include "ecj/wfs.hpp"

namespace ecj {

/// A causal graph: a reflexively and transitively closed edge set over
/// rule labels. Reflexive edges are implicit in the stored set; the
/// transitive reduction is recomputed for display.
struct CausalGraphView {
    LabelSet vertices;
    EdgeSet edges;  // irreflexive, transitively closed

    bool operator==(const CausalGraphView&) const = default;
    auto operator<=>(const CausalGraphView&) const = default;
};

class GraphArityError : public std::runtime_error {
public:
    explicit GraphArityError(const std::string& what) : std::runtime_error(what) {}
};

/// Projection onto causal-graph values: inhibited addends vanish and
/// enablers are forgotten, leaving plain graphs.
CausalValue lambda_c(const CausalValue& v);

/// The term/graph isomorphism, both directions. graph_of_term requires a
/// join-irreducible (single-addend) negation-free value.
CausalValue term_of_graph(const CausalGraphView& g);
CausalGraphView graph_of_term(const CausalValue& v);

/// A CG stable model maps every atom of the signature to a negation-free
/// value (0 for atoms outside the model's support).
using CGInterpretation = std::map<Atom, CausalValue>;

/// Enumerates CG stable models by candidate support sets. When the
/// standard WFM is total its true set is the only possible support, so no
/// enumeration is needed; otherwise all subsets of the signature are
/// tried, guarded by max_atoms_enum.
std::vector<CGInterpretation> cg_stable_models(const LabelledProgram& p,
                                               std::size_t max_atoms_enum = 16);

/// The causal graphs of the addends of m(a).
std::vector<CausalGraphView> cg_justifications(const CGInterpretation& m, const Atom& a);

/// GraphViz rendering of the transitive/reflexive reduction; node and edge
/// order is deterministic.
std::string to_dot(const CausalGraphView& g);

}  // namespace ecj
