#include "aosrm/detect.hpp"

#include <algorithm>

namespace aosrm {

namespace {

/// Proper ancestors of `name` along extends edges, nearest first. Aspect
/// chains can pass through classes/interfaces; cycle pruning upstream makes
/// this terminate.
std::vector<const TypeDecl*> proper_ancestors(const InheritanceGraph& graph,
                                              const std::string& name) {
    std::vector<const TypeDecl*> out;
    std::set<std::string> seen;
    std::vector<std::string> frontier{name};
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const std::string& current : frontier) {
            auto it = graph.parents_of.find(current);
            if (it == graph.parents_of.end()) continue;
            for (const std::string& parent : it->second) {
                if (!seen.insert(parent).second) continue;
                if (const TypeDecl* decl = graph.find(parent)) out.push_back(decl);
                next.push_back(parent);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

bool counts_for_override(const MethodSig& m) {
    return m.name != "<init>" && !m.is_static;
}

bool ancestor_declares_method(const InheritanceGraph& graph, const std::string& owner,
                              const MethodSig& method, bool aspects_only) {
    const std::string key = method.key();
    for (const TypeDecl* ancestor : proper_ancestors(graph, owner)) {
        if (aspects_only && ancestor->kind != TypeKind::Aspect) continue;
        for (const MethodSig& candidate : ancestor->methods) {
            if (counts_for_override(candidate) && candidate.key() == key) return true;
        }
    }
    return false;
}

} // namespace

std::set<std::pair<std::string, std::string>>
method_redefinitions(const InheritanceGraph& graph) {
    std::set<std::pair<std::string, std::string>> marks;
    for (const auto& [name, decl] : graph.nodes) {
        if (decl->kind != TypeKind::Class) continue;
        for (const MethodSig& method : decl->methods) {
            if (!counts_for_override(method)) continue;
            if (ancestor_declares_method(graph, name, method, /*aspects_only=*/false)) {
                marks.emplace(name, method.key());
            }
        }
    }
    return marks;
}

PointcutRedefinitions pointcut_redefinitions(const InheritanceGraph& graph) {
    PointcutRedefinitions result;
    for (const auto& [name, decl] : graph.nodes) {
        if (decl->kind != TypeKind::Aspect) continue;
        for (const PointcutDecl& pc : decl->pointcuts) {
            // Nearest ancestor declaration decides whether the override hits
            // a concrete pointcut (the AspectJ compile error case).
            for (const TypeDecl* ancestor : proper_ancestors(graph, name)) {
                if (ancestor->kind != TypeKind::Aspect) continue;
                const PointcutDecl* inherited = nullptr;
                for (const PointcutDecl& candidate : ancestor->pointcuts) {
                    if (candidate.name == pc.name) {
                        inherited = &candidate;
                        break;
                    }
                }
                if (!inherited) continue;
                result.redefined.emplace(name, pc.name);
                if (!inherited->is_abstract) {
                    result.violations.push_back(Violation{
                        ViolationKind::OverridesConcretePointcut, name,
                        "pointcut " + pc.name + " overrides concrete pointcut of " +
                            ancestor->qualified_name,
                        decl->source_path, decl->source_line});
                }
                break;
            }
        }
    }
    return result;
}

std::set<std::pair<std::string, std::string>>
attribute_redefinitions(const InheritanceGraph& graph) {
    std::set<std::pair<std::string, std::string>> marks;
    for (const auto& [name, decl] : graph.nodes) {
        if (decl->kind == TypeKind::Interface) continue;
        for (const FieldSig& field : decl->fields) {
            for (const TypeDecl* ancestor : proper_ancestors(graph, name)) {
                bool shadowed = std::any_of(
                    ancestor->fields.begin(), ancestor->fields.end(),
                    [&](const FieldSig& f) { return f.name == field.name; });
                if (shadowed) {
                    marks.emplace(name, field.name);
                    break;
                }
            }
        }
    }
    return marks;
}

std::set<std::pair<std::string, int>>
advice_redefinitions(const InheritanceGraph& graph, const DetectorConfig& config) {
    std::set<std::pair<std::string, int>> marks;
    for (const auto& [name, decl] : graph.nodes) {
        if (decl->kind != TypeKind::Aspect) continue;
        std::vector<const TypeDecl*> ancestors = proper_ancestors(graph, name);
        for (const AdviceDecl& advice : decl->advices) {
            bool marked = false;
            if (config.advice_clause_a && !advice.bound_pointcut_name.empty()) {
                for (const TypeDecl* ancestor : ancestors) {
                    if (ancestor->kind != TypeKind::Aspect) continue;
                    for (const PointcutDecl& pc : ancestor->pointcuts) {
                        if (pc.name == advice.bound_pointcut_name) {
                            marked = true;
                            break;
                        }
                    }
                    if (marked) break;
                }
            }
            if (!marked && config.advice_clause_b) {
                for (const std::string& called : advice.called_method_names) {
                    for (const MethodSig& local : decl->methods) {
                        if (local.name != called || !counts_for_override(local)) continue;
                        if (ancestor_declares_method(graph, name, local,
                                                     /*aspects_only=*/true)) {
                            marked = true;
                            break;
                        }
                    }
                    if (marked) break;
                }
            }
            if (marked) marks.emplace(name, advice.ordinal);
        }
    }
    return marks;
}

AspectPartition classify_aspects(const InheritanceGraph& graph) {
    AspectPartition partition;
    for (const auto& [name, decl] : graph.nodes) {
        if (decl->kind != TypeKind::Aspect) continue;
        if (aspect_is_abstract(*decl)) partition.abstract_.insert(name);
        else partition.concrete.insert(name);
    }
    return partition;
}

DetectionResult detect_all(const InheritanceGraph& graph, const DetectorConfig& config) {
    DetectionResult result;
    result.marks.redefined_methods = method_redefinitions(graph);
    PointcutRedefinitions pointcuts = pointcut_redefinitions(graph);
    result.marks.redefined_pointcuts = std::move(pointcuts.redefined);
    result.violations = std::move(pointcuts.violations);
    result.marks.redefined_fields = attribute_redefinitions(graph);
    result.marks.redefined_advices = advice_redefinitions(graph, config);
    result.marks.concrete_aspects = classify_aspects(graph).concrete;

    for (const auto& [name, decl] : graph.nodes) {
        if (decl->kind != TypeKind::Class) continue;
        if (config.tec_semantics == TecSemantics::Subclass) {
            // Classes whose extends edge targets an in-corpus class.
            auto it = graph.parents_of.find(name);
            if (it != graph.parents_of.end() && !it->second.empty()) {
                result.marks.extended_classes.insert(name);
            }
        } else {
            // Classes extended by at least one in-corpus class.
            auto it = graph.children_of.find(name);
            if (it == graph.children_of.end()) continue;
            for (const std::string& child : it->second) {
                const TypeDecl* child_decl = graph.find(child);
                if (child_decl && child_decl->kind == TypeKind::Class) {
                    result.marks.extended_classes.insert(name);
                    break;
                }
            }
        }
    }
    return result;
}

RedefinitionTally tally(const InheritanceGraph& graph, const RedefinitionMarks& marks) {
    RedefinitionTally t;
    for (const auto& [name, decl] : graph.nodes) {
        (void)name;
        switch (decl->kind) {
        case TypeKind::Aspect:
            ++t.TAA;
            t.A_a += static_cast<long long>(decl->advices.size());
            t.P_a += static_cast<long long>(decl->pointcuts.size());
            t.Att_a += static_cast<long long>(decl->fields.size());
            break;
        case TypeKind::Class:
            ++t.TAC;
            t.Att_a += static_cast<long long>(decl->fields.size());
            for (const MethodSig& m : decl->methods) {
                if (m.name != "<init>") ++t.M_a;
            }
            break;
        case TypeKind::Interface:
            break; // outside every tally
        }
    }
    t.A_r = static_cast<long long>(marks.redefined_advices.size());
    t.P_r = static_cast<long long>(marks.redefined_pointcuts.size());
    t.Att_r = static_cast<long long>(marks.redefined_fields.size());
    t.M_r = static_cast<long long>(marks.redefined_methods.size());
    t.TCA = static_cast<long long>(marks.concrete_aspects.size());
    t.TEC = static_cast<long long>(marks.extended_classes.size());
    return t;
}

} // namespace aosrm
