#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fibkan/democat.hpp"
#include "fibkan/finset.hpp"

using namespace fibkan;
using namespace fibkan::fset;

namespace {

// set over a 2-point base with the given fiber sizes
FinSetOver fibers2(int f0, int f1) {
    std::vector<int> proj;
    for (int i = 0; i < f0; ++i) proj.push_back(0);
    for (int i = 0; i < f1; ++i) proj.push_back(1);
    return make_set_over(2, proj);
}

} // namespace

TEST_CASE("fibrewise product multiplies fibers pointwise") {
    auto x = fibers2(1, 2);
    auto y = fibers2(3, 1);
    auto p = product_over(x, y);
    CHECK(p.object.fiber_sizes() == std::vector<int>{3, 2});

    // product with the base itself is isomorphic to x
    auto base = fibers2(1, 1);
    auto q = product_over(x, base);
    CHECK(q.object.fiber_sizes() == x.fiber_sizes());

    // an empty fiber stays empty
    auto z = fibers2(0, 2);
    CHECK(product_over(x, z).object.fiber_sizes() == std::vector<int>{0, 4});

    CHECK_THROWS_AS(product_over(x, make_set_over(3, {0})), Fault);
}

TEST_CASE("colimits are connected components of the category of elements") {
    // coequalizer over a point base: constant and identity-like on 2 elements
    auto shape = demo::parallel_pair_category();
    SetDiagram d;
    d.shape = shape;
    d.objects[0] = make_set_over(1, {0, 0});
    d.objects[1] = make_set_over(1, {0, 0});
    d.arrows[2] = {{0, 1}}; // u = identity
    d.arrows[3] = {{0, 0}}; // v = constant 0
    auto col = colimit_over(d);
    CHECK(col.object.size() == 1); // everything merges

    // coproduct of fibers (1,0) and (0,1)
    auto disc = demo::discrete_category(2);
    SetDiagram cp;
    cp.shape = disc;
    cp.objects[0] = fibers2(1, 0);
    cp.objects[1] = fibers2(0, 1);
    auto cop = colimit_over(cp);
    CHECK(cop.object.fiber_sizes() == std::vector<int>{1, 1});

    // colimit of a one-object diagram is the object itself
    auto one = demo::terminal_category();
    SetDiagram sing;
    sing.shape = one;
    sing.objects[0] = fibers2(2, 1);
    auto sc = colimit_over(sing);
    CHECK(sc.object.fiber_sizes() == std::vector<int>{2, 1});
    CHECK(sc.legs.at(0).map == std::vector<int>{0, 1, 2});
}

TEST_CASE("exponential fibers are full function sets") {
    // over a point: |Z^Y| = |Z|^|Y|
    auto y1 = make_set_over(1, {0, 0});
    auto z1 = make_set_over(1, {0, 0, 0});
    CHECK(exponential_over(y1, z1).object.size() == 9);

    auto y = fibers2(1, 2);
    auto z = fibers2(2, 1);
    CHECK(exponential_over(y, z).object.fiber_sizes() == std::vector<int>{2, 1});

    // empty fiber of Y gives a singleton fiber of the exponential
    auto ye = fibers2(0, 1);
    CHECK(exponential_over(ye, z).object.fiber_sizes() == std::vector<int>{1, 1});
}

TEST_CASE("currying is a certified bijection") {
    // singletons over a point
    auto pt = make_set_over(1, {0});
    auto rep = curry_bijection_check(pt, pt, pt);
    CHECK(rep.pass);
    CHECK(rep.counts.at("maps-product-side") == 1);

    // |hom(X x Y, Z)| = 2^4 = 16 for 2-element sets over a point
    auto two = make_set_over(1, {0, 0});
    rep = curry_bijection_check(two, two, two);
    CHECK(rep.pass);
    CHECK(rep.counts.at("maps-product-side") == 16);

    // mixed fibers over a 2-point base
    rep = curry_bijection_check(fibers2(2, 1), fibers2(1, 2), fibers2(2, 2));
    CHECK(rep.pass);
    CHECK(rep.counts.at("maps-product-side") == rep.counts.at("maps-exponential-side"));
}

TEST_CASE("restriction to a subbase keeps exactly the fibers over it") {
    auto x = fibers2(2, 3);
    auto all = restrict_subbase(x, Bits::full(2));
    CHECK(all.object.fiber_sizes() == x.fiber_sizes());
    auto none = restrict_subbase(x, Bits(2));
    CHECK(none.object.size() == 0);
    auto first = restrict_subbase(x, Bits::single(2, 0));
    CHECK(first.object.base_size == 1);
    CHECK(first.object.fiber_sizes() == std::vector<int>{2});
}

TEST_CASE("fiber functors preserve limits and colimits") {
    // a span diagram over a 2-point base
    auto shape = demo::span_category();
    SetDiagram d;
    d.shape = shape;
    d.objects[0] = fibers2(2, 1);
    d.objects[1] = fibers2(1, 2);
    d.objects[2] = fibers2(2, 2);
    d.arrows[3] = {{0, 0, 1}};
    d.arrows[4] = {{0, 1, 2}};
    auto lim = limit_over(d);
    auto col = colimit_over(d);
    for (int e = 0; e < 2; ++e) {
        // restrict every object to the single base point and recompute
        SetDiagram de;
        de.shape = shape;
        Bits sub = Bits::single(2, e);
        std::map<int, std::vector<int>> elems;
        for (auto& [o, s] : d.objects) {
            auto r = restrict_subbase(s, sub);
            de.objects[o] = r.object;
            elems[o] = r.elements;
        }
        for (auto& [m, f] : d.arrows) {
            auto dom = d.shape->dom(m), cod = d.shape->cod(m);
            FibFunction g;
            for (int old_el : elems[dom]) {
                int img = f.map[old_el];
                auto& ce = elems[cod];
                g.map.push_back((int)(std::find(ce.begin(), ce.end(), img) - ce.begin()));
            }
            de.arrows[m] = g;
        }
        auto lim_e = limit_over(de);
        auto col_e = colimit_over(de);
        CHECK(lim_e.object.size() == (int)lim.object.fiber(e).size());
        CHECK(col_e.object.size() == (int)col.object.fiber(e).size());
    }
}

TEST_CASE("restricting a colimiting cone restricts the colimit") {
    auto shape = demo::parallel_pair_category();
    SetDiagram d;
    d.shape = shape;
    d.objects[0] = fibers2(2, 1);
    d.objects[1] = fibers2(2, 2);
    d.arrows[2] = {{0, 1, 2}};
    d.arrows[3] = {{1, 1, 3}};
    auto col = colimit_over(d);
    auto sub = Bits::single(2, 1);
    auto restricted_col = restrict_subbase(col.object, sub);

    SetDiagram dr;
    dr.shape = shape;
    auto r0 = restrict_subbase(d.objects[0], sub);
    auto r1 = restrict_subbase(d.objects[1], sub);
    dr.objects[0] = r0.object;
    dr.objects[1] = r1.object;
    for (auto m : {2, 3}) {
        FibFunction g;
        for (int old_el : r0.elements) {
            int img = d.arrows[m].map[old_el];
            g.map.push_back(
                (int)(std::find(r1.elements.begin(), r1.elements.end(), img) - r1.elements.begin()));
        }
        dr.arrows[m] = g;
    }
    auto col_r = colimit_over(dr);
    CHECK(col_r.object.size() == restricted_col.object.size());
}
