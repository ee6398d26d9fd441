#include "fibkan/democat.hpp"

#include <map>
#include <tuple>

namespace fibkan::demo {

using cat::FinCategory;
using cat::MorId;
using cat::ObjId;

// ---------------------------------------------------------------------------
// F2 vector spaces
// ---------------------------------------------------------------------------

namespace {

std::uint32_t matmul_f2(std::uint32_t g, int gb, int ga, std::uint32_t f, int fa) {
    // g: gb x ga, f: ga x fa, result gb x fa
    std::uint32_t out = 0;
    for (int r = 0; r < gb; ++r)
        for (int c = 0; c < fa; ++c) {
            int bit = 0;
            for (int k = 0; k < ga; ++k)
                bit ^= ((g >> (r * ga + k)) & 1u) & ((f >> (k * fa + c)) & 1u);
            if (bit) out |= 1u << (r * fa + c);
        }
    return out;
}

std::uint32_t identity_matrix(int d) {
    std::uint32_t m = 0;
    for (int i = 0; i < d; ++i) m |= 1u << (i * d + i);
    return m;
}

} // namespace

cat::MorId F2Category::mor_of(int dom_dim, int cod_dim, std::uint32_t matrix) const {
    for (std::size_t i = 0; i < mor_desc.size(); ++i)
        if (mor_desc[i].dom_dim == dom_dim && mor_desc[i].cod_dim == cod_dim &&
            mor_desc[i].matrix == matrix)
            return (cat::MorId)i;
    throw Fault("f2_vect: no such morphism");
}

F2Category f2_vect(int max_dim) {
    if (max_dim < 0 || max_dim > 3) throw Fault("f2_vect: max_dim must be in 0..3");
    F2Category out;
    out.max_dim = max_dim;
    FinCategory::Builder b;
    for (int d = 0; d <= max_dim; ++d) b.object(d, "F2^" + std::to_string(d));

    std::map<std::tuple<int, int, std::uint32_t>, MorId> ids;
    for (int a = 0; a <= max_dim; ++a)
        for (int c = 0; c <= max_dim; ++c) {
            std::uint32_t count = std::uint32_t(1) << (a * c);
            for (std::uint32_t m = 0; m < count; ++m) {
                MorId id = (MorId)out.mor_desc.size();
                out.mor_desc.push_back({a, c, m});
                ids[{a, c, m}] = id;
                b.morphism(id, a, c);
            }
        }
    for (int d = 0; d <= max_dim; ++d) b.identity(d, ids.at({d, d, identity_matrix(d)}));
    for (MorId gi = 0; gi < (MorId)out.mor_desc.size(); ++gi)
        for (MorId fi = 0; fi < (MorId)out.mor_desc.size(); ++fi) {
            const auto& g = out.mor_desc[gi];
            const auto& f = out.mor_desc[fi];
            if (f.cod_dim != g.dom_dim) continue;
            std::uint32_t gf = matmul_f2(g.matrix, g.cod_dim, g.dom_dim, f.matrix, f.dom_dim);
            b.compose(gi, fi, ids.at({f.dom_dim, g.cod_dim, gf}));
        }
    out.category = b.build();
    return out;
}

// ---------------------------------------------------------------------------
// posets and walking shapes
// ---------------------------------------------------------------------------

cat::CatPtr poset_category(int n, const std::function<bool(int, int)>& leq,
                           const std::function<std::string(int)>& name) {
    FinCategory::Builder b;
    for (int i = 0; i < n; ++i) b.object(i, name ? name(i) : "");
    std::map<std::pair<int, int>, MorId> ids;
    MorId next = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq(i, j) || i == j) {
                ids[{i, j}] = next;
                b.morphism(next, i, j);
                ++next;
            }
    for (int i = 0; i < n; ++i) b.identity(i, ids.at({i, i}));
    for (const auto& [gp, gid] : ids)
        for (const auto& [fp, fid] : ids)
            if (fp.second == gp.first) b.compose(gid, fid, ids.at({fp.first, gp.second}));
    return b.build();
}

cat::CatPtr chain_category(int n) {
    return poset_category(n, [](int i, int j) { return i <= j; });
}

cat::CatPtr subset_poset_category(int n_elems) {
    int n = 1 << n_elems;
    return poset_category(
        n, [](int i, int j) { return (i & ~j) == 0; },
        [](int i) { return "S" + std::to_string(i); });
}

cat::CatPtr diamond_category() {
    // 0 < 1, 0 < 2, 1 < 3, 2 < 3
    return poset_category(4, [](int i, int j) {
        if (i == j) return true;
        if (i == 0) return true;
        if (j == 3) return true;
        return false;
    });
}

cat::CatPtr cyclic2_monoid_category() {
    FinCategory::Builder b;
    b.object(0);
    b.morphism(0, 0, 0, "1").morphism(1, 0, 0, "s");
    b.identity(0, 0);
    b.compose(0, 0, 0).compose(0, 1, 1).compose(1, 0, 1).compose(1, 1, 0);
    return b.build();
}

cat::CatPtr idempotent_monoid_category() {
    FinCategory::Builder b;
    b.object(0);
    b.morphism(0, 0, 0, "1").morphism(1, 0, 0, "e");
    b.identity(0, 0);
    b.compose(0, 0, 0).compose(0, 1, 1).compose(1, 0, 1).compose(1, 1, 1);
    return b.build();
}

cat::CatPtr empty_category() { return FinCategory::Builder().build(); }

cat::CatPtr terminal_category() {
    FinCategory::Builder b;
    b.object(0).morphism(0, 0, 0).identity(0, 0).compose(0, 0, 0);
    return b.build();
}

cat::CatPtr discrete_category(int n) {
    FinCategory::Builder b;
    for (int i = 0; i < n; ++i) {
        b.object(i).morphism(i, i, i).identity(i, i).compose(i, i, i);
    }
    return b.build();
}

cat::CatPtr parallel_pair_category() {
    FinCategory::Builder b;
    b.object(0).object(1);
    b.morphism(0, 0, 0).morphism(1, 1, 1).morphism(2, 0, 1, "u").morphism(3, 0, 1, "v");
    b.identity(0, 0).identity(1, 1);
    b.compose(0, 0, 0).compose(1, 1, 1);
    b.compose(2, 0, 2).compose(1, 2, 2).compose(3, 0, 3).compose(1, 3, 3);
    return b.build();
}

cat::CatPtr span_category() {
    // 1 <- 0 -> 2
    FinCategory::Builder b;
    b.object(0).object(1).object(2);
    b.morphism(0, 0, 0).morphism(1, 1, 1).morphism(2, 2, 2);
    b.morphism(3, 0, 1, "l").morphism(4, 0, 2, "r");
    b.identity(0, 0).identity(1, 1).identity(2, 2);
    b.compose(0, 0, 0).compose(1, 1, 1).compose(2, 2, 2);
    b.compose(3, 0, 3).compose(1, 3, 3).compose(4, 0, 4).compose(2, 4, 4);
    return b.build();
}

cat::CatPtr cospan_category() {
    // 1 -> 0 <- 2
    FinCategory::Builder b;
    b.object(0).object(1).object(2);
    b.morphism(0, 0, 0).morphism(1, 1, 1).morphism(2, 2, 2);
    b.morphism(3, 1, 0, "l").morphism(4, 2, 0, "r");
    b.identity(0, 0).identity(1, 1).identity(2, 2);
    b.compose(0, 0, 0).compose(1, 1, 1).compose(2, 2, 2);
    b.compose(0, 3, 3).compose(3, 1, 3).compose(0, 4, 4).compose(4, 2, 4);
    return b.build();
}

// ---------------------------------------------------------------------------
// finite sets with all functions
// ---------------------------------------------------------------------------

cat::MorId SetsCategory::mor_of(int dom_size, int cod_size,
                                const std::vector<int>& values) const {
    for (std::size_t i = 0; i < mor_desc.size(); ++i)
        if (mor_desc[i].dom_size == dom_size && mor_desc[i].cod_size == cod_size &&
            mor_desc[i].values == values)
            return (cat::MorId)i;
    throw Fault("concrete_sets_category: no such morphism");
}

SetsCategory concrete_sets_category(int n_sizes) {
    SetsCategory out;
    FinCategory::Builder b;
    for (int k = 0; k < n_sizes; ++k) b.object(k, "set" + std::to_string(k));

    std::map<std::tuple<int, int, std::vector<int>>, MorId> ids;
    for (int a = 0; a < n_sizes; ++a)
        for (int c = 0; c < n_sizes; ++c) {
            // functions {0..a-1} -> {0..c-1}; none when a>0 and c==0
            std::vector<std::vector<int>> fns;
            if (a == 0) {
                fns.push_back({});
            } else if (c > 0) {
                std::vector<int> v(a, 0);
                while (true) {
                    fns.push_back(v);
                    int i = 0;
                    while (i < a && ++v[i] == c) v[i++] = 0;
                    if (i == a) break;
                }
            }
            for (auto& v : fns) {
                MorId id = (MorId)out.mor_desc.size();
                out.mor_desc.push_back({a, c, v});
                ids[{a, c, v}] = id;
                b.morphism(id, a, c);
            }
        }
    for (int k = 0; k < n_sizes; ++k) {
        std::vector<int> idv(k);
        for (int i = 0; i < k; ++i) idv[i] = i;
        b.identity(k, ids.at({k, k, idv}));
    }
    for (MorId gi = 0; gi < (MorId)out.mor_desc.size(); ++gi)
        for (MorId fi = 0; fi < (MorId)out.mor_desc.size(); ++fi) {
            const auto& g = out.mor_desc[gi];
            const auto& f = out.mor_desc[fi];
            if (f.cod_size != g.dom_size) continue;
            std::vector<int> comp(f.dom_size);
            for (int i = 0; i < f.dom_size; ++i) comp[i] = g.values[f.values[i]];
            b.compose(gi, fi, ids.at({f.dom_size, g.cod_size, comp}));
        }
    out.category = b.build();
    return out;
}

std::vector<std::pair<std::string, cat::CatPtr>> category_corpus() {
    std::vector<std::pair<std::string, cat::CatPtr>> out;
    out.emplace_back("terminal", terminal_category());
    out.emplace_back("discrete2", discrete_category(2));
    out.emplace_back("chain2", chain_category(2));
    out.emplace_back("chain3", chain_category(3));
    out.emplace_back("chain4", chain_category(4));
    out.emplace_back("diamond", diamond_category());
    out.emplace_back("subsets2", subset_poset_category(2));
    out.emplace_back("subsets3", subset_poset_category(3));
    out.emplace_back("parallel-pair", parallel_pair_category());
    out.emplace_back("span", span_category());
    out.emplace_back("cospan", cospan_category());
    out.emplace_back("monoid-z2", cyclic2_monoid_category());
    out.emplace_back("monoid-idem", idempotent_monoid_category());
    out.emplace_back("f2-vect1", f2_vect(1).category);
    out.emplace_back("f2-vect2", f2_vect(2).category);
    out.emplace_back("sets3", concrete_sets_category(3).category);
    return out;
}

} // namespace fibkan::demo
