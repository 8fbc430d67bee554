#include "aosrm/model.hpp"

#include "aosrm/error.hpp"

#include <algorithm>
#include <functional>

namespace aosrm {

namespace {

std::string last_segment(const std::string& dotted) {
    size_t pos = dotted.rfind('.');
    return pos == std::string::npos ? dotted : dotted.substr(pos + 1);
}

struct NameIndex {
    std::set<std::string> qualified;
    std::map<std::string, std::vector<std::string>> by_simple;

    void add(const std::string& qualified_name) {
        if (!qualified.insert(qualified_name).second) return;
        by_simple[last_segment(qualified_name)].push_back(qualified_name);
    }
};

NameIndex index_corpus(const std::vector<SourceUnit>& corpus) {
    NameIndex index;
    for (const SourceUnit& unit : corpus) {
        for (const TypeDecl& type : unit.types) index.add(type.qualified_name);
    }
    return index;
}

Resolution resolve_with_index(const std::string& ref, const SourceUnit& context,
                              const NameIndex& index) {
    Resolution res;
    if (ref.empty()) return res;
    // (1) exact qualified-name match
    if (index.qualified.count(ref)) {
        res.qualified_name = ref;
        return res;
    }
    // (2) same-package match (also covers nested refs relative to the package)
    if (!context.package_name.empty()) {
        std::string candidate = context.package_name + "." + ref;
        if (index.qualified.count(candidate)) {
            res.qualified_name = candidate;
            return res;
        }
    }
    if (ref.find('.') != std::string::npos) return res; // dotted and unmatched
    // (3) explicit import: the import decides, in corpus or not
    for (const std::string& imp : context.imports) {
        if (!imp.empty() && imp.back() == '*') continue;
        if (last_segment(imp) == ref) {
            if (index.qualified.count(imp)) res.qualified_name = imp;
            return res;
        }
    }
    // (4) unique corpus-wide simple-name match
    auto it = index.by_simple.find(ref);
    if (it == index.by_simple.end()) return res;
    if (it->second.size() == 1) {
        res.qualified_name = it->second.front();
        return res;
    }
    res.ambiguous = true;
    return res;
}

bool is_interface_node(const InheritanceGraph& graph, const std::string& name) {
    const TypeDecl* decl = graph.find(name);
    return decl && decl->kind == TypeKind::Interface;
}

} // namespace

const char* violation_kind_name(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::ExtendsConcreteAspect: return "ExtendsConcreteAspect";
    case ViolationKind::ClassExtendsAspect: return "ClassExtendsAspect";
    case ViolationKind::InterfaceExtendsAspect: return "InterfaceExtendsAspect";
    case ViolationKind::InheritanceCycle: return "InheritanceCycle";
    case ViolationKind::DuplicateTypeName: return "DuplicateTypeName";
    case ViolationKind::OverridesConcretePointcut: return "OverridesConcretePointcut";
    }
    return "?";
}

bool aspect_is_abstract(const TypeDecl& decl) {
    if (decl.is_abstract) return true;
    for (const PointcutDecl& pc : decl.pointcuts) {
        if (pc.is_abstract) return true;
    }
    for (const MethodSig& m : decl.methods) {
        if (m.is_abstract) return true;
    }
    return false;
}

Resolution resolve_name(const std::string& ref, const SourceUnit& context,
                        const std::vector<SourceUnit>& corpus) {
    return resolve_with_index(ref, context, index_corpus(corpus));
}

BuildResult build_graph(const std::vector<SourceUnit>& units) {
    BuildResult result;
    InheritanceGraph& graph = result.graph;

    // Order-normalize so the output never depends on how units arrived.
    std::vector<const SourceUnit*> ordered;
    ordered.reserve(units.size());
    for (const SourceUnit& u : units) ordered.push_back(&u);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const SourceUnit* a, const SourceUnit* b) {
                         return a->file.absolute_path.native() <
                                b->file.absolute_path.native();
                     });

    NameIndex index;
    for (const SourceUnit* unit : ordered) {
        for (const TypeDecl& type : unit->types) {
            auto [it, inserted] = graph.nodes.emplace(type.qualified_name, &type);
            if (!inserted) {
                result.violations.push_back(Violation{
                    ViolationKind::DuplicateTypeName, type.qualified_name,
                    "duplicate declaration dropped; first seen in " + it->second->source_path,
                    type.source_path, type.source_line});
                continue;
            }
            index.add(type.qualified_name);
        }
    }

    // Resolve supertype references and apply the structural legality rules.
    std::set<std::pair<std::string, std::string>> extends_set;
    std::set<std::pair<std::string, std::string>> implements_set;
    for (const SourceUnit* unit : ordered) {
        for (const TypeDecl& type : unit->types) {
            const TypeDecl* node = graph.find(type.qualified_name);
            if (node != &type) continue; // dropped duplicate
            for (const std::string& ref : type.extends_refs) {
                Resolution res = resolve_with_index(ref, *unit, index);
                if (res.ambiguous) {
                    result.warnings.push_back(
                        type.qualified_name + ": supertype reference '" + ref +
                        "' is ambiguous across packages; treated as external");
                }
                if (!res.qualified_name) {
                    graph.external_refs.insert(ref);
                    continue;
                }
                const std::string& parent_name = *res.qualified_name;
                const TypeDecl* parent = graph.find(parent_name);
                bool legal = false;
                switch (type.kind) {
                case TypeKind::Class:
                    if (parent->kind == TypeKind::Aspect) {
                        result.violations.push_back(Violation{
                            ViolationKind::ClassExtendsAspect, type.qualified_name,
                            "class extends aspect " + parent_name, type.source_path,
                            type.source_line});
                    } else if (parent->kind != TypeKind::Class) {
                        result.warnings.push_back(type.qualified_name +
                                                  ": class extends non-class " +
                                                  parent_name + "; edge dropped");
                    } else {
                        legal = true;
                    }
                    break;
                case TypeKind::Interface:
                    if (parent->kind == TypeKind::Aspect) {
                        result.violations.push_back(Violation{
                            ViolationKind::InterfaceExtendsAspect, type.qualified_name,
                            "interface extends aspect " + parent_name, type.source_path,
                            type.source_line});
                    } else if (parent->kind != TypeKind::Interface) {
                        result.warnings.push_back(type.qualified_name +
                                                  ": interface extends non-interface " +
                                                  parent_name + "; edge dropped");
                    } else {
                        legal = true;
                    }
                    break;
                case TypeKind::Aspect:
                    if (parent->kind == TypeKind::Aspect && !aspect_is_abstract(*parent)) {
                        result.violations.push_back(Violation{
                            ViolationKind::ExtendsConcreteAspect, type.qualified_name,
                            "extends concrete aspect " + parent_name, type.source_path,
                            type.source_line});
                    } else {
                        legal = true; // abstract aspect, class or interface
                    }
                    break;
                }
                if (legal) extends_set.emplace(type.qualified_name, parent_name);
            }
            for (const std::string& ref : type.implements_refs) {
                Resolution res = resolve_with_index(ref, *unit, index);
                if (res.ambiguous) {
                    result.warnings.push_back(
                        type.qualified_name + ": interface reference '" + ref +
                        "' is ambiguous across packages; treated as external");
                }
                if (!res.qualified_name) {
                    graph.external_refs.insert(ref);
                    continue;
                }
                if (!is_interface_node(graph, *res.qualified_name)) {
                    result.warnings.push_back(type.qualified_name +
                                              ": implements non-interface " +
                                              *res.qualified_name + "; edge dropped");
                    continue;
                }
                implements_set.emplace(type.qualified_name, *res.qualified_name);
            }
        }
    }

    // Cycle pruning: find strongly connected components of the extends
    // relation; any component with more than one node (or a self-loop) is a
    // cycle. Its internal edges are dropped so DIT terminates.
    {
        std::map<std::string, std::vector<std::string>> adj;
        for (const auto& [child, parent] : extends_set) adj[child].push_back(parent);

        std::map<std::string, int> index_of, lowlink;
        std::vector<std::string> stack;
        std::set<std::string> on_stack;
        std::vector<std::vector<std::string>> cyclic_sccs;
        int counter = 0;

        std::function<void(const std::string&)> strongconnect =
            [&](const std::string& v) {
                index_of[v] = lowlink[v] = counter++;
                stack.push_back(v);
                on_stack.insert(v);
                auto it = adj.find(v);
                if (it != adj.end()) {
                    for (const std::string& w : it->second) {
                        if (!index_of.count(w)) {
                            strongconnect(w);
                            lowlink[v] = std::min(lowlink[v], lowlink[w]);
                        } else if (on_stack.count(w)) {
                            lowlink[v] = std::min(lowlink[v], index_of[w]);
                        }
                    }
                }
                if (lowlink[v] == index_of[v]) {
                    std::vector<std::string> component;
                    while (true) {
                        std::string w = stack.back();
                        stack.pop_back();
                        on_stack.erase(w);
                        component.push_back(w);
                        if (w == v) break;
                    }
                    bool self_loop = component.size() == 1 &&
                                     extends_set.count({component[0], component[0]}) > 0;
                    if (component.size() > 1 || self_loop) {
                        std::sort(component.begin(), component.end());
                        cyclic_sccs.push_back(std::move(component));
                    }
                }
            };

        for (const auto& [name, decl] : graph.nodes) {
            (void)decl;
            if (!index_of.count(name)) strongconnect(name);
        }

        std::sort(cyclic_sccs.begin(), cyclic_sccs.end());
        for (const std::vector<std::string>& component : cyclic_sccs) {
            std::string detail = "inheritance cycle:";
            for (const std::string& member : component) detail += " " + member;
            const TypeDecl* subject = graph.find(component.front());
            result.violations.push_back(Violation{
                ViolationKind::InheritanceCycle, component.front(), detail,
                subject ? subject->source_path : "", subject ? subject->source_line : 0});
            std::set<std::string> members(component.begin(), component.end());
            for (auto it = extends_set.begin(); it != extends_set.end();) {
                if (members.count(it->first) && members.count(it->second)) {
                    it = extends_set.erase(it);
                } else {
                    ++it;
                }
            }
        }
    }

    graph.extends_edges.assign(extends_set.begin(), extends_set.end());
    graph.implements_edges.assign(implements_set.begin(), implements_set.end());
    for (const auto& [child, parent] : graph.extends_edges) {
        graph.parents_of[child].push_back(parent);
        graph.children_of[parent].push_back(child);
    }
    return result;
}

int dit(const InheritanceGraph& graph, const std::string& type) {
    if (!graph.nodes.count(type)) {
        throw Error(ErrorKind::UnknownType, "unknown type: " + type);
    }
    std::map<std::string, int> memo;
    std::function<int(const std::string&)> depth = [&](const std::string& name) -> int {
        auto hit = memo.find(name);
        if (hit != memo.end()) return hit->second;
        int best = 0;
        auto it = graph.parents_of.find(name);
        if (it != graph.parents_of.end()) {
            for (const std::string& parent : it->second) {
                best = std::max(best, 1 + depth(parent));
            }
        }
        memo[name] = best;
        return best;
    };
    return depth(type);
}

int noc(const InheritanceGraph& graph, const std::string& type) {
    if (!graph.nodes.count(type)) {
        throw Error(ErrorKind::UnknownType, "unknown type: " + type);
    }
    auto it = graph.children_of.find(type);
    return it == graph.children_of.end() ? 0 : static_cast<int>(it->second.size());
}

} // namespace aosrm
