#pragma once

#include "aosrm/model.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace aosrm {

enum class TecSemantics { Subclass, Superclass };

struct DetectorConfig {
    bool advice_clause_a = true; // advice bound to an ancestor-declared pointcut
    bool advice_clause_b = true; // advice calling a local override of an ancestor method
    TecSemantics tec_semantics = TecSemantics::Subclass;
};

struct RedefinitionMarks {
    std::set<std::pair<std::string, std::string>> redefined_methods;   // (owner, sig key)
    std::set<std::pair<std::string, std::string>> redefined_fields;    // (owner, field name)
    std::set<std::pair<std::string, std::string>> redefined_pointcuts; // (aspect, name)
    std::set<std::pair<std::string, int>> redefined_advices;           // (aspect, ordinal)
    std::set<std::string> extended_classes;
    std::set<std::string> concrete_aspects;
};

/// Twelve counters behind the six factors. The _r counter never exceeds its
/// _a sibling because every mark references a locally declared member.
struct RedefinitionTally {
    long long A_r = 0, A_a = 0;     // advices
    long long P_r = 0, P_a = 0;     // pointcuts
    long long Att_r = 0, Att_a = 0; // attributes (classes and aspects)
    long long M_r = 0, M_a = 0;     // class methods, constructors excluded
    long long TCA = 0, TAA = 0;     // concrete / all aspects
    long long TEC = 0, TAC = 0;     // extended / all classes
};

/// A method is redefined when a proper class ancestor declares the same
/// signature key; constructors and statics (hiding, not overriding) excluded.
std::set<std::pair<std::string, std::string>>
method_redefinitions(const InheritanceGraph& graph);

struct PointcutRedefinitions {
    std::set<std::pair<std::string, std::string>> redefined;
    std::vector<Violation> violations; // OverridesConcretePointcut
};

/// A pointcut is redefined when a proper ancestor aspect declares one with
/// the same name; concretizing an inherited abstract pointcut counts.
/// Overriding a concrete inherited pointcut is still counted but flagged.
PointcutRedefinitions pointcut_redefinitions(const InheritanceGraph& graph);

/// A field is redefined when any proper extends-ancestor declares a field
/// with the same name, regardless of type.
std::set<std::pair<std::string, std::string>>
attribute_redefinitions(const InheritanceGraph& graph);

/// Advice has no name, so redefinition is tracked through the structure it
/// binds: (a) its named pointcut is declared in a proper ancestor aspect, or
/// (b) it calls a method of its own aspect that overrides an ancestor
/// aspect's method. Either clause can be disabled for sensitivity analysis.
std::set<std::pair<std::string, int>>
advice_redefinitions(const InheritanceGraph& graph, const DetectorConfig& config);

struct AspectPartition {
    std::set<std::string> concrete;
    std::set<std::string> abstract_;
};

AspectPartition classify_aspects(const InheritanceGraph& graph);

struct DetectionResult {
    RedefinitionMarks marks;
    std::vector<Violation> violations;
};

/// Runs every detector and assembles the marks, including the extended-class
/// set under the configured TEC semantics.
DetectionResult detect_all(const InheritanceGraph& graph, const DetectorConfig& config);

RedefinitionTally tally(const InheritanceGraph& graph, const RedefinitionMarks& marks);

} // namespace aosrm
