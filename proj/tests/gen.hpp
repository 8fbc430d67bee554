#pragma once

// Random corpus generator for the property suites: small Java/AspectJ
// compilation units with believable hierarchies, including the occasional
// illegal edge so pruning paths get exercised too.

#include "aosrm/token.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testgen {

struct GenFile {
    std::string path;
    std::string text;
};

class CorpusGen {
public:
    explicit CorpusGen(unsigned seed) : rng_(seed) {}

    std::vector<GenFile> corpus() {
        std::vector<GenFile> files;
        class_names_.clear();
        aspect_names_.clear();
        interface_names_.clear();

        int n_interfaces = pick(0, 2);
        int n_classes = pick(0, 7);
        int n_aspects = pick(0, 5);

        for (int i = 0; i < n_interfaces; ++i) {
            std::string name = "I" + std::to_string(i);
            interface_names_.push_back(name);
            files.push_back({"/gen/" + name + ".java", interface_source(name)});
        }
        for (int i = 0; i < n_classes; ++i) {
            std::string name = "C" + std::to_string(i);
            files.push_back({"/gen/" + name + ".java", class_source(name)});
            class_names_.push_back(name);
        }
        for (int i = 0; i < n_aspects; ++i) {
            std::string name = "A" + std::to_string(i);
            files.push_back({"/gen/" + name + ".aj", aspect_source(name)});
            aspect_names_.push_back(name);
        }
        return files;
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
    std::vector<std::string> class_names_;
    std::vector<std::string> aspect_names_;
    std::vector<std::string> interface_names_;

    int pick(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }
    bool chance(int percent) { return pick(1, 100) <= percent; }

    std::string method_name() {
        static const char* kNames[] = {"go", "run", "halt", "load", "emit", "sync"};
        return kNames[pick(0, 5)];
    }
    std::string field_name() {
        static const char* kNames[] = {"size", "label", "count", "left", "right"};
        return kNames[pick(0, 4)];
    }
    std::string pointcut_name() {
        static const char* kNames[] = {"traced", "saved", "routed", "checked"};
        return kNames[pick(0, 3)];
    }
    std::string param_list() {
        static const char* kTypes[] = {"int", "long", "String"};
        int n = pick(0, 2);
        std::string out;
        for (int i = 0; i < n; ++i) {
            if (i) out += ", ";
            out += kTypes[pick(0, 2)];
            out += " p" + std::to_string(i);
        }
        return out;
    }

    std::string methods_block(int count, bool allow_abstract) {
        std::string out;
        for (int i = 0; i < count; ++i) {
            bool is_abstract = allow_abstract && chance(15);
            bool is_static = !is_abstract && chance(15);
            out += "  ";
            if (is_abstract) out += "abstract ";
            if (is_static) out += "static ";
            out += "void " + method_name() + "(" + param_list() + ")";
            out += is_abstract ? ";\n" : " { tick(); }\n";
        }
        return out;
    }

    std::string fields_block(int count) {
        std::string out;
        static const char* kTypes[] = {"int", "long", "double", "String"};
        for (int i = 0; i < count; ++i) {
            out += std::string("  ") + kTypes[pick(0, 3)] + " " + field_name() + ";\n";
        }
        return out;
    }

    std::string interface_source(const std::string& name) {
        std::string out = "package gen;\n\ninterface " + name + " {\n";
        out += "  void touch();\n";
        out += "}\n";
        return out;
    }

    std::string class_source(const std::string& name) {
        std::string out = "package gen;\n\n";
        bool is_abstract = chance(20);
        if (is_abstract) out += "abstract ";
        out += "class " + name;
        if (!class_names_.empty() && chance(55)) {
            out += " extends " + class_names_[pick(0, (int)class_names_.size() - 1)];
        } else if (!aspect_names_.empty() && chance(10)) {
            out += " extends " + aspect_names_[pick(0, (int)aspect_names_.size() - 1)];
        } else if (chance(10)) {
            out += " extends External" + std::to_string(pick(0, 3));
        }
        if (!interface_names_.empty() && chance(30)) {
            out += " implements " + interface_names_[pick(0, (int)interface_names_.size() - 1)];
        }
        out += " {\n";
        out += fields_block(pick(0, 3));
        out += methods_block(pick(0, 3), is_abstract);
        out += "}\n";
        return out;
    }

    std::string advice_block() {
        std::string out;
        int n = pick(0, 2);
        for (int i = 0; i < n; ++i) {
            static const char* kKinds[] = {"before()", "after()", "void around()"};
            out += std::string("  ") + kKinds[pick(0, 2)] + " : ";
            if (chance(60)) {
                out += pointcut_name() + "()";
            } else {
                out += "call(* gen.C0." + method_name() + "())";
            }
            out += " {";
            if (chance(70)) out += " " + method_name() + "();";
            if (chance(25)) out += " this." + method_name() + "();";
            if (chance(25)) out += " helper." + method_name() + "();";
            out += " }\n";
        }
        return out;
    }

    std::string aspect_source(const std::string& name) {
        std::string out = "package gen;\n\n";
        bool is_abstract = chance(45);
        if (is_abstract) out += "abstract ";
        out += "aspect " + name;
        if (!aspect_names_.empty() && chance(50)) {
            out += " extends " + aspect_names_[pick(0, (int)aspect_names_.size() - 1)];
        } else if (!class_names_.empty() && chance(15)) {
            out += " extends " + class_names_[pick(0, (int)class_names_.size() - 1)];
        }
        out += " {\n";
        out += fields_block(pick(0, 2));
        int n_pointcuts = pick(0, 2);
        for (int i = 0; i < n_pointcuts; ++i) {
            if (chance(30)) {
                out += "  abstract pointcut " + pointcut_name() + "();\n";
            } else {
                out += "  pointcut " + pointcut_name() + "() : execution(* gen.C0." +
                       method_name() + "());\n";
            }
        }
        out += advice_block();
        out += methods_block(pick(0, 2), is_abstract);
        out += "}\n";
        return out;
    }
};

/// Re-renders source with random comments/whitespace between tokens. Every
/// separator contains whitespace (or ends a line comment with a newline), so
/// adjacent tokens never merge.
inline std::string perturb_source(const std::string& text, std::mt19937& rng) {
    static const char* kFillers[] = {" ",          "\n",  "  ",          "\t",
                                     " /* x */ ",  " ",   " // note\n", "\n\n  "};
    std::uniform_int_distribution<int> filler(0, 7);
    std::string out;
    for (const aosrm::Token& tok : aosrm::tokenize(text)) {
        if (tok.kind == aosrm::TokenKind::End) break;
        out += tok.text;
        out += kFillers[filler(rng)];
    }
    return out;
}

} // namespace testgen
