#pragma once

// Guarded counting logic over incidence-graph models. Formulas use vertex
// variables v1, v2, ... and edge variables e1..ek; quantifiers count distinct
// value tuples (components may coincide) and vertex quantification must be
// guarded: each quantifier carries a guard function mapping every free
// vertex variable of its body to an edge variable, standing for the
// conjunction of the corresponding incidence atoms.
//
// Guard depth tracks edge quantifications: an edge quantifier adds its tuple
// length, everything else passes the maximum through. The counting semantics
// (distinct tuples, repeats allowed) is the conventional reading; the AST
// keeps exact-count quantifiers as sugar for a pair of threshold ones.
//
// Concrete syntax, whitespace-insensitive:
//
//   formula  := atom | "~" formula | "(" formula "&" formula ")" | quant
//   atom     := "T" | vvar "=" vvar | evar "=" evar | "E(" evar "," vvar ")"
//   quant    := ("existsge" | "existseq") NAT "(" varlist ")" guard? "." formula
//   guard    := "[" (vvar "@" evar) ("," vvar "@" evar)* "]" | "[]"
//   vvar     := "v" NAT ; evar := "e" NAT
//
// A missing guard bracket is accepted only when the empty guard fits, i.e.
// the body has no free vertex variables.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hgx/hypergraph.hpp"

namespace hgx {

enum class FormulaKind {
    Top,
    VEq,
    EEq,
    Edge,
    Not,
    And,
    ExistsGeqV,
    ExistsGeqE,
    ExistsEqV,
    ExistsEqE
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    FormulaKind kind = FormulaKind::Top;
    int a = 0, b = 0;          // VEq/EEq operands; Edge: a = edge var, b = vertex var
    int n = 0;                 // counting threshold
    std::vector<int> tuple;    // quantified variable indices, ascending
    std::map<int, int> guard;  // vertex var -> guarding edge var
    FormulaPtr child, rhs;     // Not/quantifier body: child; And: child & rhs
};

FormulaPtr f_top();
FormulaPtr f_veq(int i, int ip);
FormulaPtr f_eeq(int j, int jp);
FormulaPtr f_edge(int j, int i);  // E(e_j, v_i)
FormulaPtr f_not(FormulaPtr phi);
FormulaPtr f_and(FormulaPtr l, FormulaPtr r);
FormulaPtr f_exists_v(bool exact, int n, std::vector<int> tuple, std::map<int, int> guard,
                      FormulaPtr body);
FormulaPtr f_exists_e(bool exact, int n, std::vector<int> tuple, std::map<int, int> guard,
                      FormulaPtr body);

// Free variables and guard depth follow the inductive definition; a
// quantifier's implicit body is the guarded conjunction, so guard entries
// contribute free variables.
std::set<int> free_v(const FormulaPtr& phi);
std::set<int> free_e(const FormulaPtr& phi);
int guard_depth(const FormulaPtr& phi);
int ast_size(const FormulaPtr& phi);

struct LogicVerdict {
    bool ok = true;
    std::vector<std::string> violations;
};

// Structural side conditions for membership with k edge variables: index
// ranges, ascending tuples, tuple variables free in the guarded body, and
// guard domains equal to the body's free vertex variables.
LogicVerdict wellformed_gck(const FormulaPtr& phi, int k);

// Recognises the restricted guard-consistent fragment: the formula is a
// guarded pair (guard conjunction & core), conjunctions split the guard
// along the conjuncts' free variables, vertex quantifiers restrict it, and
// edge quantifiers may redirect a guard entry only onto a quantified or
// previously unused edge variable.
LogicVerdict is_rgc(const FormulaPtr& phi, int k);

FormulaPtr parse_formula(const std::string& text);
// .gcl file: the formula text, with "#" lines as comments.
FormulaPtr parse_formula_file(const std::string& path);
std::string render(const FormulaPtr& phi);

// Replaces every exact-count quantifier by (>= n and not >= n+1); free
// variables and guard depth are unchanged.
FormulaPtr desugar_eq(const FormulaPtr& phi);

struct Interpretation {
    IncidenceGraph graph;
    std::map<int, int> nu_v;  // vertex variable -> red index
    std::map<int, int> nu_e;  // edge variable -> blue index
};

// Counting evaluation; memoises subformula results per restriction of the
// assignment to the subformula's free variables. Throws on a free variable
// the interpretation does not assign.
bool eval(const FormulaPtr& phi, const Interpretation& interp);

// A deterministic pool of well-formed sentences with guard depth <= d and
// AST size <= size_bound, drawn from counting patterns (edge counts, edges
// with many vertices, vertex degrees, distinct-vertex and shared-vertex
// counts) and their negations and conjunctions.
std::vector<FormulaPtr> sentence_pool(int k, int d, int size_bound, unsigned seed);

}  // namespace hgx
