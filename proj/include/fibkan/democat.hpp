#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fibkan/fincat.hpp"

namespace fibkan::demo {

// Category of F2-vector spaces F2^0 .. F2^max_dim with all linear maps.
// Object id d is F2^d; a morphism F2^a -> F2^b is a b x a matrix over F2,
// stored row-major in `matrix` (bit r*a+c is entry (r,c)).
struct F2Category {
    cat::CatPtr category;
    int max_dim;
    struct MorDesc {
        int dom_dim, cod_dim;
        std::uint32_t matrix;
    };
    std::vector<MorDesc> mor_desc; // indexed by morphism id
    cat::MorId mor_of(int dom_dim, int cod_dim, std::uint32_t matrix) const;
};

F2Category f2_vect(int max_dim);

// Poset as a category: one morphism x -> y whenever leq(x, y).
cat::CatPtr poset_category(int n, const std::function<bool(int, int)>& leq,
                           const std::function<std::string(int)>& name = nullptr);
cat::CatPtr chain_category(int n);
cat::CatPtr subset_poset_category(int n_elems); // object id = subset bitmask
cat::CatPtr diamond_category();

// One-object categories (monoids).
cat::CatPtr cyclic2_monoid_category();     // {1, s}, s s = 1
cat::CatPtr idempotent_monoid_category();  // {1, e}, e e = e

// Walking shapes.
cat::CatPtr empty_category();
cat::CatPtr terminal_category();
cat::CatPtr discrete_category(int n);
cat::CatPtr parallel_pair_category(); // two objects, two parallel arrows
cat::CatPtr span_category();          // b <- a -> c
cat::CatPtr cospan_category();        // b -> a <- c

// Skeletal category of finite sets {0..k} for k < n_sizes with all functions.
// Object id k is the set {0,..,k-1}; morphism descriptions give the function
// table (value of point i in digit i, base cod size).
struct SetsCategory {
    cat::CatPtr category;
    struct MorDesc {
        int dom_size, cod_size;
        std::vector<int> values;
    };
    std::vector<MorDesc> mor_desc;
    cat::MorId mor_of(int dom_size, int cod_size, const std::vector<int>& values) const;
};
SetsCategory concrete_sets_category(int n_sizes);

// Named demo categories with <= 12 objects, used by the law-consistency
// sweeps. Every entry passes validate_category.
std::vector<std::pair<std::string, cat::CatPtr>> category_corpus();

} // namespace fibkan::demo
