#include "fibkan/finset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fibkan::fset {

using cat::MorId;
using cat::ObjId;

std::vector<int> FinSetOver::fiber(int e) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (proj[i] == e) out.push_back(i);
    return out;
}

std::vector<int> FinSetOver::fiber_sizes() const {
    std::vector<int> out(base_size, 0);
    for (int p : proj) ++out[p];
    return out;
}

std::string FinSetOver::label(int i) const {
    if (i >= 0 && i < (int)labels.size() && !labels[i].empty()) return labels[i];
    return std::to_string(i);
}

FinSetOver make_set_over(int base_size, std::vector<int> proj) {
    for (int p : proj)
        if (p < 0 || p >= base_size) throw Fault("make_set_over: projection out of range");
    FinSetOver s;
    s.base_size = base_size;
    s.proj = std::move(proj);
    return s;
}

CheckReport validate_fib_function(const FinSetOver& src, const FinSetOver& dst,
                                  const FibFunction& f) {
    CheckReport r;
    r.check_id = "fset.fib-function";
    if ((int)f.map.size() != src.size()) {
        r.fail("arity", "map has " + std::to_string(f.map.size()) + " entries");
        return r;
    }
    if (src.base_size != dst.base_size) {
        r.fail("base-mismatch", "");
        return r;
    }
    for (int i = 0; i < src.size(); ++i) {
        if (f.map[i] < 0 || f.map[i] >= dst.size()) {
            r.fail("range", "element " + std::to_string(i));
            continue;
        }
        if (dst.proj[f.map[i]] != src.proj[i])
            r.fail("fiber", "element " + std::to_string(i) + " crosses fibers");
    }
    return r;
}

std::vector<FibFunction> all_fib_functions(const FinSetOver& src, const FinSetOver& dst) {
    if (src.base_size != dst.base_size) throw Fault("all_fib_functions: base mismatch");
    std::vector<std::vector<int>> choices(src.size());
    for (int i = 0; i < src.size(); ++i) {
        for (int j = 0; j < dst.size(); ++j)
            if (dst.proj[j] == src.proj[i]) choices[i].push_back(j);
        if (choices[i].empty()) return {}; // some element has nowhere to go
    }
    std::vector<FibFunction> out;
    FibFunction cur;
    cur.map.assign(src.size(), 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == src.size()) {
            out.push_back(cur);
            return;
        }
        for (int v : choices[k]) {
            cur.map[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

long long count_fib_functions(const FinSetOver& src, const FinSetOver& dst) {
    if (src.base_size != dst.base_size) throw Fault("count_fib_functions: base mismatch");
    auto fs = src.fiber_sizes();
    auto fd = dst.fiber_sizes();
    long long n = 1;
    for (int e = 0; e < src.base_size; ++e) {
        long long c = 1;
        for (int i = 0; i < fs[e]; ++i) c *= fd[e];
        n *= c;
    }
    return n;
}

ProductOver product_over(const FinSetOver& x, const FinSetOver& y) {
    if (x.base_size != y.base_size) throw Fault("product_over: base mismatch");
    ProductOver out;
    out.object.base_size = x.base_size;
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < y.size(); ++j)
            if (x.proj[i] == y.proj[j]) {
                out.index[{i, j}] = (int)out.pairs.size();
                out.pairs.emplace_back(i, j);
                out.object.proj.push_back(x.proj[i]);
                out.object.labels.push_back("(" + x.label(i) + "," + y.label(j) + ")");
            }
    return out;
}

SetColimit colimit_over(const SetDiagram& d) {
    // nodes of the category of elements, per shape object
    std::vector<ObjId> sobjs;
    for (const auto& o : d.shape->objects()) sobjs.push_back(o.id);
    std::map<ObjId, int> offset;
    int total = 0;
    int base_size = 0;
    for (ObjId i : sobjs) {
        offset[i] = total;
        total += d.objects.at(i).size();
        base_size = d.objects.at(i).base_size;
    }
    // union-find over element nodes
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (const auto& m : d.shape->morphisms()) {
        const FinSetOver& src = d.objects.at(m.dom);
        auto it = d.arrows.find(m.id);
        if (it == d.arrows.end()) {
            if (m.dom == m.cod && d.shape->identity_of(m.dom) == m.id) continue;
            throw Fault("colimit_over: diagram is missing arrow " + std::to_string(m.id));
        }
        const FibFunction& f = it->second;
        for (int t = 0; t < src.size(); ++t) unite(offset[m.dom] + t, offset[m.cod] + f.map[t]);
    }
    // components in increasing least-node order
    std::map<int, int> comp_of_root;
    SetColimit out;
    out.object.base_size = base_size;
    for (int n = 0; n < total; ++n) {
        int r = find(n);
        if (!comp_of_root.count(r)) {
            comp_of_root[r] = (int)out.object.proj.size();
            out.object.proj.push_back(-1);
            out.object.labels.push_back("[" + std::to_string(n) + "]");
        }
    }
    // projection [(i,t)] -> p_i(t), consistent when arrows are fiber-preserving
    for (ObjId i : sobjs) {
        const FinSetOver& xi = d.objects.at(i);
        FibFunction leg;
        leg.map.resize(xi.size());
        for (int t = 0; t < xi.size(); ++t) {
            int c = comp_of_root.at(find(offset.at(i) + t));
            leg.map[t] = c;
            if (out.object.proj[c] == -1)
                out.object.proj[c] = xi.proj[t];
            else if (out.object.proj[c] != xi.proj[t])
                throw Fault("colimit_over: arrows are not fiber-preserving");
        }
        out.legs[i] = leg;
    }
    return out;
}

SetLimit limit_over(const SetDiagram& d) {
    std::vector<ObjId> sobjs;
    for (const auto& o : d.shape->objects()) sobjs.push_back(o.id);
    int base_size = sobjs.empty() ? 0 : d.objects.at(sobjs[0]).base_size;

    SetLimit out;
    out.object.base_size = base_size;
    if (sobjs.empty())
        throw Fault("limit_over: empty shape (the terminal object is the base over itself)");
    std::vector<int> tuple(sobjs.size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int e) {
        if (k == sobjs.size()) {
            // check arrow compatibility
            for (const auto& m : d.shape->morphisms()) {
                auto it = d.arrows.find(m.id);
                if (it == d.arrows.end()) {
                    if (m.dom == m.cod && d.shape->identity_of(m.dom) == m.id) continue;
                    throw Fault("limit_over: diagram is missing arrow " + std::to_string(m.id));
                }
                int di = (int)(std::find(sobjs.begin(), sobjs.end(), m.dom) - sobjs.begin());
                int ci = (int)(std::find(sobjs.begin(), sobjs.end(), m.cod) - sobjs.begin());
                if (it->second.map[tuple[di]] != tuple[ci]) return;
            }
            out.tuples.push_back(tuple);
            out.object.proj.push_back(e);
            return;
        }
        const FinSetOver& xi = d.objects.at(sobjs[k]);
        for (int t = 0; t < xi.size(); ++t)
            if (xi.proj[t] == e) {
                tuple[k] = t;
                rec(k + 1, e);
            }
    };
    for (int e = 0; e < base_size; ++e) rec(0, e);

    for (std::size_t k = 0; k < sobjs.size(); ++k) {
        FibFunction leg;
        leg.map.resize(out.tuples.size());
        for (std::size_t t = 0; t < out.tuples.size(); ++t) leg.map[t] = out.tuples[t][k];
        out.legs[sobjs[k]] = leg;
    }
    return out;
}

int ExpOver::index_of(int base_point, const std::vector<int>& values) const {
    for (std::size_t i = 0; i < desc.size(); ++i)
        if (desc[i].first == base_point && desc[i].second == values) return (int)i;
    throw Fault("exponential_over: no such element");
}

ExpOver exponential_over(const FinSetOver& y, const FinSetOver& z) {
    if (y.base_size != z.base_size) throw Fault("exponential_over: base mismatch");
    ExpOver out;
    out.object.base_size = y.base_size;
    for (int e = 0; e < y.base_size; ++e) {
        auto yf = y.fiber(e);
        auto zf = z.fiber(e);
        std::vector<std::vector<int>> fns;
        if (yf.empty()) {
            fns.push_back({}); // the empty function
        } else if (!zf.empty()) {
            std::vector<std::size_t> ix(yf.size(), 0);
            while (true) {
                std::vector<int> v(yf.size());
                for (std::size_t i = 0; i < yf.size(); ++i) v[i] = zf[ix[i]];
                fns.push_back(v);
                std::size_t i = 0;
                while (i < yf.size() && ++ix[i] == zf.size()) ix[i++] = 0;
                if (i == yf.size()) break;
            }
            std::sort(fns.begin(), fns.end());
        }
        for (auto& v : fns) {
            out.desc.emplace_back(e, v);
            out.object.proj.push_back(e);
        }
    }
    return out;
}

CheckReport curry_bijection_check(const FinSetOver& x, const FinSetOver& y,
                                  const FinSetOver& z) {
    CheckReport r;
    r.check_id = "fset.curry-bijection";
    ProductOver xy = product_over(x, y);
    ExpOver zy = exponential_over(y, z);

    auto uncurried = all_fib_functions(xy.object, z);
    auto curried = all_fib_functions(x, zy.object);
    r.counts["maps-product-side"] = (long long)uncurried.size();
    r.counts["maps-exponential-side"] = (long long)curried.size();

    // transpose each product-side map and collect the images
    std::vector<std::vector<int>> transposed;
    for (const auto& f : uncurried) {
        FibFunction g;
        g.map.resize(x.size());
        for (int xi = 0; xi < x.size(); ++xi) {
            int e = x.proj[xi];
            auto yf = y.fiber(e);
            std::vector<int> values(yf.size());
            for (std::size_t k = 0; k < yf.size(); ++k)
                values[k] = f.map[xy.index.at({xi, yf[k]})];
            g.map[xi] = zy.index_of(e, values);
        }
        if (!validate_fib_function(x, zy.object, g).pass) {
            r.fail("transpose-invalid", "a transpose is not fiber-preserving");
            return r;
        }
        transposed.push_back(g.map);
    }
    std::sort(transposed.begin(), transposed.end());
    if (std::adjacent_find(transposed.begin(), transposed.end()) != transposed.end())
        r.fail("not-injective", "two maps share a transpose");

    // untranspose each exponential-side map and check the round trip
    for (const auto& g : curried) {
        FibFunction f;
        f.map.resize(xy.object.size());
        for (int p = 0; p < xy.object.size(); ++p) {
            auto [xi, yj] = xy.pairs[p];
            const auto& [e, values] = zy.desc[g.map[xi]];
            (void)e;
            auto yf = y.fiber(y.proj[yj]);
            std::size_t pos = std::find(yf.begin(), yf.end(), yj) - yf.begin();
            f.map[p] = values[pos];
        }
        if (!validate_fib_function(xy.object, z, f).pass) {
            r.fail("untranspose-invalid", "an untranspose is not fiber-preserving");
            return r;
        }
        // transposing back must give g
        std::vector<int> back(x.size());
        for (int xi = 0; xi < x.size(); ++xi) {
            int e = x.proj[xi];
            auto yf = y.fiber(e);
            std::vector<int> values(yf.size());
            for (std::size_t k = 0; k < yf.size(); ++k)
                values[k] = f.map[xy.index.at({xi, yf[k]})];
            back[xi] = zy.index_of(e, values);
        }
        if (back != g.map) {
            r.fail("round-trip", "transpose(untranspose(g)) != g");
            return r;
        }
    }
    if (uncurried.size() != curried.size())
        r.fail("cardinality",
               std::to_string(uncurried.size()) + " != " + std::to_string(curried.size()));
    return r;
}

RestrictResult restrict_subbase(const FinSetOver& x, const Bits& subset) {
    if (subset.size() != x.base_size) throw Fault("restrict_subbase: wrong base size");
    RestrictResult out;
    std::vector<int> new_base(x.base_size, -1);
    subset.for_each([&](int e) {
        new_base[e] = (int)out.base_points.size();
        out.base_points.push_back(e);
    });
    out.object.base_size = (int)out.base_points.size();
    for (int i = 0; i < x.size(); ++i)
        if (subset.test(x.proj[i])) {
            out.elements.push_back(i);
            out.object.proj.push_back(new_base[x.proj[i]]);
            out.object.labels.push_back(x.label(i));
        }
    return out;
}

} // namespace fibkan::fset
