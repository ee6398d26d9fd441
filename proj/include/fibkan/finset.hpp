#pragma once

#include <map>
#include <string>
#include <vector>

#include "fibkan/bits.hpp"
#include "fibkan/fincat.hpp"
#include "fibkan/report.hpp"

namespace fibkan::fset {

// A finite set over the base E = {0..base_size-1}: elements 0..size()-1 with
// a total projection. Constructed objects keep a deterministic element order
// and record what each element denotes via `labels`.
struct FinSetOver {
    int base_size = 0;
    std::vector<int> proj;
    std::vector<std::string> labels; // empty or parallel to proj

    int size() const { return (int)proj.size(); }
    std::vector<int> fiber(int e) const;
    std::vector<int> fiber_sizes() const;
    std::string label(int i) const;
};

FinSetOver make_set_over(int base_size, std::vector<int> proj);

// Fiber-preserving function between sets over the same base.
struct FibFunction {
    std::vector<int> map; // element of source -> element of target
};

CheckReport validate_fib_function(const FinSetOver& src, const FinSetOver& dst,
                                  const FibFunction& f);

// All fiber-preserving functions src -> dst, lexicographic in the element
// value vector.
std::vector<FibFunction> all_fib_functions(const FinSetOver& src, const FinSetOver& dst);
long long count_fib_functions(const FinSetOver& src, const FinSetOver& dst);

struct ProductOver {
    FinSetOver object;
    std::vector<std::pair<int, int>> pairs; // element -> (x element, y element)
    std::map<std::pair<int, int>, int> index;
};

// Fibrewise product: pairs with equal projection. Fault on base mismatch.
ProductOver product_over(const FinSetOver& x, const FinSetOver& y);

// A finite diagram of sets over a common base. Every non-identity shape
// morphism must have an entry in `arrows`; identities may be omitted.
struct SetDiagram {
    cat::CatPtr shape;
    std::map<cat::ObjId, FinSetOver> objects;
    std::map<cat::MorId, FibFunction> arrows;
};

struct SetColimit {
    FinSetOver object; // elements = connected components of the element category
    std::map<cat::ObjId, FibFunction> legs;
};

// Colimit via connected components of the category of elements; the
// projection sends a class [(i,t)] to the projection of t.
SetColimit colimit_over(const SetDiagram& d);

struct SetLimit {
    FinSetOver object; // elements = compatible tuples
    std::map<cat::ObjId, FibFunction> legs;
    std::vector<std::vector<int>> tuples; // element -> per-shape-object choice
};

// Limit as the set of projection-compatible, arrow-compatible tuples.
SetLimit limit_over(const SetDiagram& d);

struct ExpOver {
    FinSetOver object;
    // element -> (base point, value vector over the fiber of y at that point)
    std::vector<std::pair<int, std::vector<int>>> desc;
    int index_of(int base_point, const std::vector<int>& values) const;
};

// Fibrewise exponential: the fiber over e is all functions Y_e -> Z_e
// (a single element when Y_e is empty). Fault on base mismatch.
ExpOver exponential_over(const FinSetOver& y, const FinSetOver& z);

// Builds the transposes in both directions and certifies the currying
// bijection between maps X x Y -> Z and X -> Z^Y over the base.
CheckReport curry_bijection_check(const FinSetOver& x, const FinSetOver& y,
                                  const FinSetOver& z);

struct RestrictResult {
    FinSetOver object;            // over the subset re-indexed as 0..k-1
    std::vector<int> elements;    // new element -> old element
    std::vector<int> base_points; // new base point -> old base point
};

RestrictResult restrict_subbase(const FinSetOver& x, const Bits& subset);

} // namespace fibkan::fset
