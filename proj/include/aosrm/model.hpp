#pragma once

#include "aosrm/decl.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace aosrm {

enum class ViolationKind {
    ExtendsConcreteAspect,
    ClassExtendsAspect,
    InterfaceExtendsAspect,
    InheritanceCycle,
    DuplicateTypeName,
    OverridesConcretePointcut,
};

const char* violation_kind_name(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string subject; // qualified name
    std::string detail;
    std::string path;
    int line = 0;
};

/// Corpus-wide extends/implements structure. Edges only connect in-corpus
/// nodes; references that resolve to nothing live in external_refs. Illegal
/// and cyclic extends edges are recorded as Violations and pruned, so the
/// extends relation is always acyclic and downstream queries terminate.
struct InheritanceGraph {
    std::map<std::string, const TypeDecl*> nodes;
    std::vector<std::pair<std::string, std::string>> extends_edges;    // (child, parent)
    std::vector<std::pair<std::string, std::string>> implements_edges; // (type, interface)
    std::set<std::string> external_refs;

    // extends adjacency, derived from extends_edges
    std::map<std::string, std::vector<std::string>> parents_of;
    std::map<std::string, std::vector<std::string>> children_of;

    const TypeDecl* find(const std::string& qualified_name) const {
        auto it = nodes.find(qualified_name);
        return it == nodes.end() ? nullptr : it->second;
    }
};

struct BuildResult {
    InheritanceGraph graph;
    std::vector<Violation> violations;
    std::vector<std::string> warnings;
};

struct Resolution {
    std::optional<std::string> qualified_name; // nullopt -> external
    bool ambiguous = false;
};

/// Resolution order: exact qualified match, same-package simple name,
/// explicit import, unique corpus-wide simple name; two corpus-wide
/// candidates are ambiguous and resolve external.
Resolution resolve_name(const std::string& ref, const SourceUnit& context,
                        const std::vector<SourceUnit>& corpus);

/// Builds the class-aspect inheritance graph. Legality violations are
/// collected, never thrown: extending a concrete aspect, a class or interface
/// extending an aspect, inheritance cycles (edges dropped) and duplicate
/// qualified names (later duplicate dropped). The result is independent of
/// unit order.
BuildResult build_graph(const std::vector<SourceUnit>& units);

/// Longest upward extends chain to an in-corpus root; external ancestry
/// counts nothing. Throws Error{UnknownType}.
int dit(const InheritanceGraph& graph, const std::string& type);

/// Direct children via extends edges. Throws Error{UnknownType}.
int noc(const InheritanceGraph& graph, const std::string& type);

/// AspectJ treats an aspect as non-instantiable when it is declared abstract
/// or carries any abstract pointcut/method.
bool aspect_is_abstract(const TypeDecl& decl);

} // namespace aosrm
