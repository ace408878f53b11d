#pragma once

#include <optional>

#include "cobar/graded.hpp"

namespace cobar {

// Line-oriented definition files: sections in brackets, key = value entries,
// '#' comments. Every referenced name must be defined earlier in the file.
// parse -> serialize -> parse is the identity on the abstract syntax.

struct DefField {
    std::string name;
    unsigned characteristic = 0;
};

struct DefAlgebra {
    std::string name, field, order = "degrevlex";
    std::vector<std::string> vars;
    std::vector<std::string> rels;
};

struct DefMap {
    std::string name, source, target;
    std::vector<std::pair<std::string, std::string>> images;  // var -> expression
};

struct DefAlgebroid {
    std::string name, a0, a1, eta_l, eta_r, counit, antipode;
    std::vector<std::pair<std::string, std::string>> comult;  // var -> tensor expr
    std::string flatness = "declared-flat";
    std::vector<std::string> basis;
};

struct DefComodule {
    std::string name, algebroid;
    std::vector<std::string> gens;
    std::vector<std::string> rels;                         // combinations of gens
    std::vector<std::pair<std::string, std::string>> psi;  // gen -> tensor expr
};

struct DefComoduleMap {
    std::string name, source, target;
    std::vector<std::pair<std::string, std::string>> images;  // gen -> combination
};

struct DefComplex {
    std::string name, algebroid;
    std::vector<std::pair<int, std::string>> terms;
    std::vector<std::pair<int, std::string>> diffs;
};

struct DefFile {
    enum class Kind { field, algebra, map, algebroid, comodule, comodule_map, complex };
    std::vector<std::pair<Kind, std::size_t>> order;  // section order, index per kind
    std::vector<DefField> fields;
    std::vector<DefAlgebra> algebras;
    std::vector<DefMap> maps;
    std::vector<DefAlgebroid> algebroids;
    std::vector<DefComodule> comodules;
    std::vector<DefComoduleMap> comodule_maps;
    std::vector<DefComplex> complexes;
};

DefFile parse_def_file(const std::string& text);
std::string serialize_def_file(const DefFile& f);

// Built objects, by name. Construction validates well-formedness (matching
// variable counts, defined references, d o d = 0 for complexes).
struct Workspace {
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, AlgebraMap> maps;
    std::map<std::string, HopfPtr> algebroids;
    std::map<std::string, ComodulePtr> comodules;
    std::map<std::string, ComoduleMap> comodule_maps;
    std::map<std::string, std::shared_ptr<Complex>> complexes;
};

Workspace build_workspace(const DefFile& f,
                          uint64_t budget = PresentedAlgebra::default_budget);

// Parse "p (*) q + r (*) s" over the given context.
TensorExpr parse_tensor_expr(const RingCtxPtr& ctx, const std::string& text);

}  // namespace cobar
