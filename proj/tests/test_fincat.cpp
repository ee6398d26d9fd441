#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "fibkan/democat.hpp"
#include "fibkan/fincat.hpp"

using namespace fibkan;
using namespace fibkan::cat;

namespace {

DiagramData discrete_diagram(const CatPtr& ambient, const std::vector<ObjId>& at) {
    DiagramData d;
    d.shape = demo::discrete_category((int)at.size());
    d.functor.source = d.shape;
    d.functor.target = ambient;
    for (int i = 0; i < (int)at.size(); ++i) {
        d.functor.obj_map[i] = at[i];
        d.functor.mor_map[i] = ambient->identity_of(at[i]);
    }
    return d;
}

DiagramData empty_diagram(const CatPtr& ambient) {
    DiagramData d;
    d.shape = demo::empty_category();
    d.functor.source = d.shape;
    d.functor.target = ambient;
    return d;
}

DiagramData parallel_pair_diagram(const CatPtr& ambient, MorId u, MorId v) {
    DiagramData d;
    d.shape = demo::parallel_pair_category();
    d.functor.source = d.shape;
    d.functor.target = ambient;
    ObjId a = ambient->dom(u), b = ambient->cod(u);
    d.functor.obj_map[0] = a;
    d.functor.obj_map[1] = b;
    d.functor.mor_map[0] = ambient->identity_of(a);
    d.functor.mor_map[1] = ambient->identity_of(b);
    d.functor.mor_map[2] = u;
    d.functor.mor_map[3] = v;
    return d;
}

} // namespace

TEST_CASE("category validation accepts the terminal category and a poset") {
    CHECK(validate_category(*demo::terminal_category()).pass);
    auto poset01 = demo::chain_category(2); // 0 <= 1, three morphisms
    CHECK(poset01->morphisms().size() == 3);
    CHECK(validate_category(*poset01).pass);
    for (auto& [name, c] : demo::category_corpus()) {
        INFO(name);
        CHECK(validate_category(*c).pass);
    }
}

TEST_CASE("category validation flags a composite with the wrong endpoints") {
    FinCategory::Builder b;
    b.object(0).object(1);
    b.morphism(0, 0, 0).morphism(1, 1, 1).morphism(2, 0, 1);
    b.identity(0, 0).identity(1, 1);
    b.compose(0, 0, 0).compose(1, 1, 1);
    b.compose(2, 0, 2).compose(1, 2, 0); // 1 . 2 should land in hom(0,1), not 0:0->0
    auto c = b.build();
    auto rep = validate_category(*c);
    CHECK_FALSE(rep.pass);
    bool found = false;
    for (auto& w : rep.witnesses)
        if (w.label == "bad-endpoints" && w.detail.find("(1,2)") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("comma category of {F2} into constant F2^2 has the four linear maps") {
    auto f2 = demo::f2_vect(3);
    auto w = full_subcategory(f2.category, {1});
    FunctorData inc = inclusion_functor(w, f2.category);
    FunctorData cst = constant_functor(demo::terminal_category(), f2.category, 2);
    auto comma = comma_category(inc, cst);
    // oracle: linear maps F2 -> F2^2 are determined by the image of the
    // generator, so there are exactly |F2^2| = 4 of them
    CHECK(comma.category->objects().size() == 4);
    CHECK(validate_category(*comma.category).pass);
    CHECK(validate_functor(comma.proj_left).pass);
    CHECK(validate_functor(comma.proj_right).pass);
}

TEST_CASE("slice comma category collects all morphisms into the apex object") {
    auto poset = demo::subset_poset_category(2);
    FunctorData idf = identity_functor(poset);
    FunctorData cst = constant_functor(demo::terminal_category(), poset, 3);
    auto comma = comma_category(idf, cst);
    CHECK(comma.category->objects().size() == poset->morphisms_into(3).size());
}

TEST_CASE("comma of two constants at the same object of the terminal category") {
    auto t = demo::terminal_category();
    FunctorData c1 = constant_functor(t, t, 0);
    auto comma = comma_category(c1, c1);
    CHECK(comma.category->objects().size() == 1);
    CHECK(comma.category->morphisms().size() == 1);
}

TEST_CASE("limit of the empty diagram is the terminal object") {
    auto poset = demo::subset_poset_category(2); // has top = 3
    auto res = limit(empty_diagram(poset));
    REQUIRE(res.has_value());
    CHECK(res->cone.apex == 3);
    auto co = colimit(empty_diagram(poset));
    REQUIRE(co.has_value());
    CHECK(co->cone.apex == 0); // bottom = initial
}

TEST_CASE("products and coproducts in the subset poset are meets and joins") {
    auto poset = demo::subset_poset_category(2);
    // oracle: meet of subsets is the bitwise intersection, join the union
    for (ObjId x = 0; x < 4; ++x)
        for (ObjId y = 0; y < 4; ++y) {
            auto lim = limit(discrete_diagram(poset, {x, y}));
            REQUIRE(lim.has_value());
            CHECK(lim->cone.apex == (x & y));
            auto colim = colimit(discrete_diagram(poset, {x, y}));
            REQUIRE(colim.has_value());
            CHECK(colim->cone.apex == (x | y));
        }
}

TEST_CASE("equalizer of two parallel functions is the agreement subobject") {
    auto sets = demo::concrete_sets_category(4);
    // f, g : {0,1,2} -> {0,1,2}
    std::vector<int> fv = {0, 1, 1};
    std::vector<int> gv = {0, 2, 1};
    MorId f = sets.mor_of(3, 3, fv);
    MorId g = sets.mor_of(3, 3, gv);
    auto lim = limit(parallel_pair_diagram(sets.category, f, g));
    REQUIRE(lim.has_value());
    // oracle: brute-force agreement set
    int agree = 0;
    for (int i = 0; i < 3; ++i)
        if (fv[i] == gv[i]) ++agree;
    CHECK(agree == 2);
    CHECK(lim->cone.apex == agree);
}

TEST_CASE("every other cone factors uniquely through a computed limit") {
    auto poset = demo::subset_poset_category(2);
    auto d = discrete_diagram(poset, {1, 2});
    auto lim = limit(d);
    REQUIRE(lim.has_value());
    // every cone over the same diagram: apexes below both 1 and 2
    for (const auto& o : poset->objects()) {
        for (MorId l1 : poset->hom(o.id, 1))
            for (MorId l2 : poset->hom(o.id, 2)) {
                ConeData other{o.id, {{0, l1}, {1, l2}}, true};
                auto u = factor_through(d, lim->cone, other);
                CHECK(u.has_value());
            }
    }
}

TEST_CASE("limit apex is stable under object relabeling up to isomorphism") {
    auto mk = [](bool relabel) {
        // subset poset of {1,2} with ids optionally permuted
        auto perm = [&](int i) { return relabel ? 3 - i : i; };
        FinCategory::Builder b;
        std::map<std::pair<int, int>, MorId> ids;
        MorId next = 0;
        for (int i = 0; i < 4; ++i) b.object(perm(i));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if ((i & ~j) == 0) {
                    ids[{perm(i), perm(j)}] = next;
                    b.morphism(next, perm(i), perm(j));
                    ++next;
                }
        for (int i = 0; i < 4; ++i) b.identity(perm(i), ids.at({perm(i), perm(i)}));
        for (auto& [gp, gid] : ids)
            for (auto& [fp, fid] : ids)
                if (fp.second == gp.first) b.compose(gid, fid, ids.at({fp.first, gp.second}));
        return b.build();
    };
    auto c1 = mk(false);
    auto c2 = mk(true);
    auto l1 = limit(discrete_diagram(c1, {1, 2}));
    auto l2 = limit(discrete_diagram(c2, {3 - 1, 3 - 2}));
    REQUIRE(l1.has_value());
    REQUIRE(l2.has_value());
    // same objects under the relabeling, so the apexes must correspond
    CHECK(l2->cone.apex == 3 - l1->cone.apex);
}

TEST_CASE("a full subcategory equal to everything is codense and dense") {
    auto poset = demo::chain_category(3);
    SubcatSpec all{{0, 1, 2}};
    CHECK(is_codense(all, poset).pass);
    CHECK(is_dense(all, poset).pass);
}

TEST_CASE("{F2} is not dense in F2-vect(dim<=2): the canonical colimit overshoots") {
    auto f2 = demo::f2_vect(2);
    SubcatSpec w{{1}};
    auto rep = is_dense(w, f2.category);
    CHECK_FALSE(rep.pass);
    bool failure_at_dim2 = false;
    for (auto& wit : rep.witnesses)
        if (wit.detail.find("F2^2") != std::string::npos) failure_at_dim2 = true;
    CHECK(failure_at_dim2);
}

TEST_CASE("a terminal object is codense in a two-object poset") {
    auto poset = demo::chain_category(2); // 0 <= 1, terminal object 1
    SubcatSpec w{{1}};
    // oracle: the canonical cone of X over arrows X -> 1 is X -> 1 itself;
    // X = lim holds since every cone apex A maps uniquely into X... which
    // requires hom(A, X) to have exactly one commuting element. In a chain
    // every hom has at most one element and A <= 1 always, so the check is
    // whether X -> 1 is terminal among cones, true only for X = 1 and X = 0
    // when hom(1, 0) is empty. For X = 0 the cone over 0 -> 1 has apex
    // candidates {0, 1}; apex 1 admits no map to 0, so 0 is not a limit --
    // wait, the limit of the single-object diagram {1} is 1 itself, not 0.
    // Hence codensity fails at X = 0.
    auto rep = is_codense(w, poset);
    CHECK_FALSE(rep.pass);
    // and the skeleton: at X = 1 the comparison is an iso
    auto cd = diagram_under(w, poset, 1);
    auto lim1 = limit(cd.diagram);
    REQUIRE(lim1.has_value());
    auto u = factor_through(cd.diagram, lim1->cone, cd.canonical);
    REQUIRE(u.has_value());
    CHECK(poset->is_iso(*u));
}

TEST_CASE("functor and naturality validators catch broken data") {
    auto chain = demo::chain_category(2);
    FunctorData f = identity_functor(chain);
    CHECK(validate_functor(f).pass);
    f.obj_map[0] = 1; // breaks endpoint preservation for the 0 -> 1 arrow
    CHECK_FALSE(validate_functor(f).pass);

    NatTransData n;
    n.source = identity_functor(chain);
    n.target = identity_functor(chain);
    for (auto& o : chain->objects()) n.components[o.id] = chain->identity_of(o.id);
    CHECK(validate_nat_trans(n).pass);
}
