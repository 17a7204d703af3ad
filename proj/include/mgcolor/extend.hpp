#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mgcolor/base_color.hpp"
#include "mgcolor/coloring.hpp"
#include "mgcolor/multigraph.hpp"
#include "mgcolor/oracle.hpp"
#include "mgcolor/precoloring.hpp"

namespace mgcolor {

/// One case application from the extension proof's analysis. Op-I/II/III act
/// at the processed endpoint alone; Case-2 chains two such applications; the
/// Case-3 operations resolve a T2 endpoint whose collision lives in the same
/// dense subgraph as the other endpoint's collision.
enum class CaseId { op1, op2, op3, case2, case31, case32, case331, case332 };

std::string case_name(CaseId c);

struct TraceEntry {
    std::string op;
    std::string case_id;
    std::vector<int> edges;
    std::vector<int> colors;
    int e1_size = -1;
    int e2_size = -1;

    bool operator==(const TraceEntry& o) const = default;
};
using Trace = std::vector<TraceEntry>;

/// The working state: matching M*, the tagged special color class (edges
/// carrying color maxdeg+maxmult), and the coloring of g - (M u M*).
struct ExtensionTriple {
    EdgeSet mstar;
    EdgeSet special;
    PartialEdgeColoring phi;

    bool operator==(const ExtensionTriple& o) const = default;
};

struct ImproperRecord {
    EdgeId precolored = -1;
    Vertex endpoint = -1;
    EdgeId collider = -1;
    bool t2 = false;

    bool operator<(const ImproperRecord& o) const {
        if (precolored != o.precolored) return precolored < o.precolored;
        return endpoint < o.endpoint;
    }
};

struct ImproperReport {
    EdgeSet e1, e2;
    std::vector<ImproperRecord> records;  // sorted by (precolored, endpoint)

    const ImproperRecord* find(EdgeId f, Vertex endpoint) const;
    bool any_t2() const;
};

enum class TripleStatus { infeasible_precondition, prefeasible, feasible };

/// Finds every collision between the current coloring and the precoloring,
/// split into T1 (collider disjoint from V(M*)) and T2 (collider touching
/// V(M*)). A parallel copy of a precolored edge carrying its color is
/// reported at both endpoints.
ImproperReport classify_improper(const Multigraph& g, const Precoloring& p,
                                 const ExtensionTriple& t);

TripleStatus triple_status(const Multigraph& g, const Precoloring& p,
                           const ExtensionTriple& t,
                           std::string* reason = nullptr,
                           long long budget = kDefaultBudget);

/// A case operation's stated precondition does not hold for this state; the
/// driver moves on to the next case.
class CasePreconditionError : public std::runtime_error {
public:
    explicit CasePreconditionError(const std::string& clause)
        : std::runtime_error(clause) {}
};

/// Applies one case operation for the precolored edge f, T2-improper at u.
/// Returns the new triple; appends the recoloring delta to the trace when
/// one is given. Throws CasePreconditionError when the case does not apply
/// and DefectError when a postcondition re-check fails.
ExtensionTriple apply_case_operation(const Multigraph& g, const Precoloring& p,
                                     const ExtensionTriple& t, EdgeId f,
                                     Vertex u, CaseId case_id,
                                     Trace* trace = nullptr,
                                     long long budget = kDefaultBudget);

enum class Strategy { paper_first, oracle_only };

struct ExtendResult {
    PartialEdgeColoring coloring;
    Trace trace;
    bool used_fallback = false;
};

/// Extends the precoloring to a proper coloring of all of g with at most
/// maxdeg+maxmult colors. paper_first runs the structural pipeline and falls
/// back to the exhaustive oracle only when no case applies; the final
/// coloring is always verified before being returned.
ExtendResult extend_precoloring(const Multigraph& g, const Precoloring& p,
                                Strategy strategy = Strategy::paper_first,
                                long long budget = kDefaultBudget);

}  // namespace mgcolor
