#include "fibkan/fincat.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fibkan::cat {

// ---------------------------------------------------------------------------
// FinCategory
// ---------------------------------------------------------------------------

FinCategory::Builder& FinCategory::Builder::object(ObjId id, std::string name) {
    objects_.push_back({id, std::move(name)});
    return *this;
}
FinCategory::Builder& FinCategory::Builder::morphism(MorId id, ObjId dom, ObjId cod,
                                                     std::string name) {
    morphisms_.push_back({id, dom, cod, std::move(name)});
    return *this;
}
FinCategory::Builder& FinCategory::Builder::identity(ObjId obj, MorId mor) {
    identity_[obj] = mor;
    return *this;
}
FinCategory::Builder& FinCategory::Builder::compose(MorId g, MorId f, MorId gf) {
    table_[FinCategory::key(g, f)] = gf;
    return *this;
}

std::shared_ptr<const FinCategory> FinCategory::Builder::build() const {
    auto out = std::shared_ptr<FinCategory>(new FinCategory());
    out->objects_ = objects_;
    out->morphisms_ = morphisms_;
    out->identity_ = identity_;
    out->table_ = table_;
    out->freeze();
    for (const auto& m : out->morphisms_) {
        if (!out->has_object(m.dom) || !out->has_object(m.cod))
            throw Fault("morphism " + std::to_string(m.id) + " references unknown object");
    }
    for (const auto& [o, m] : out->identity_) {
        if (!out->has_object(o) || !out->has_morphism(m))
            throw Fault("identity assignment references unknown id");
    }
    return out;
}

void FinCategory::freeze() {
    std::sort(objects_.begin(), objects_.end(),
              [](const Obj& a, const Obj& b) { return a.id < b.id; });
    std::sort(morphisms_.begin(), morphisms_.end(),
              [](const Mor& a, const Mor& b) { return a.id < b.id; });
    obj_ix_.clear();
    mor_ix_.clear();
    hom_.clear();
    for (std::size_t i = 0; i < objects_.size(); ++i) obj_ix_[objects_[i].id] = i;
    for (std::size_t i = 0; i < morphisms_.size(); ++i) {
        mor_ix_[morphisms_[i].id] = i;
        hom_[{morphisms_[i].dom, morphisms_[i].cod}].push_back(morphisms_[i].id);
    }
}

MorId FinCategory::identity_of(ObjId o) const {
    auto it = identity_.find(o);
    if (it == identity_.end())
        throw Fault("object " + std::to_string(o) + " has no identity assigned");
    return it->second;
}

std::optional<MorId> FinCategory::compose_opt(MorId g, MorId f) const {
    auto it = table_.find(key(g, f));
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

MorId FinCategory::compose(MorId g, MorId f) const {
    auto r = compose_opt(g, f);
    if (!r)
        throw Fault("composition table has no entry for (" + std::to_string(g) + "," +
                    std::to_string(f) + ")");
    return *r;
}

const std::vector<MorId>& FinCategory::hom(ObjId a, ObjId b) const {
    static const std::vector<MorId> empty;
    auto it = hom_.find({a, b});
    return it == hom_.end() ? empty : it->second;
}

std::vector<MorId> FinCategory::morphisms_from(ObjId a) const {
    std::vector<MorId> out;
    for (const auto& m : morphisms_)
        if (m.dom == a) out.push_back(m.id);
    return out;
}
std::vector<MorId> FinCategory::morphisms_into(ObjId b) const {
    std::vector<MorId> out;
    for (const auto& m : morphisms_)
        if (m.cod == b) out.push_back(m.id);
    return out;
}

std::optional<MorId> FinCategory::inverse(MorId f) const {
    const Mor& m = morphism(f);
    for (MorId g : hom(m.cod, m.dom)) {
        auto gf = compose_opt(g, f);
        auto fg = compose_opt(f, g);
        if (gf && fg && *gf == identity_of(m.dom) && *fg == identity_of(m.cod)) return g;
    }
    return std::nullopt;
}

bool FinCategory::is_iso(MorId f) const { return inverse(f).has_value(); }

bool FinCategory::objects_isomorphic(ObjId a, ObjId b) const {
    if (a == b) return true;
    for (MorId f : hom(a, b))
        if (is_iso(f)) return true;
    return false;
}

std::string FinCategory::obj_label(ObjId o) const {
    const Obj& ob = object(o);
    return ob.name.empty() ? std::to_string(o) : ob.name + "#" + std::to_string(o);
}
std::string FinCategory::mor_label(MorId m) const {
    const Mor& mo = morphism(m);
    std::string n = mo.name.empty() ? std::to_string(m) : mo.name + "#" + std::to_string(m);
    return n + ":" + std::to_string(mo.dom) + "->" + std::to_string(mo.cod);
}

// ---------------------------------------------------------------------------
// functor helpers
// ---------------------------------------------------------------------------

FunctorData identity_functor(const CatPtr& c) {
    FunctorData f;
    f.source = c;
    f.target = c;
    for (const auto& o : c->objects()) f.obj_map[o.id] = o.id;
    for (const auto& m : c->morphisms()) f.mor_map[m.id] = m.id;
    return f;
}

FunctorData compose_functors(const FunctorData& g, const FunctorData& f) {
    if (f.target.get() != g.source.get())
        throw Fault("compose_functors: middle categories differ");
    FunctorData r;
    r.source = f.source;
    r.target = g.target;
    for (const auto& [a, b] : f.obj_map) r.obj_map[a] = g.obj_map.at(b);
    for (const auto& [a, b] : f.mor_map) r.mor_map[a] = g.mor_map.at(b);
    return r;
}

FunctorData constant_functor(const CatPtr& shape, const CatPtr& target, ObjId at) {
    FunctorData f;
    f.source = shape;
    f.target = target;
    MorId id_at = target->identity_of(at);
    for (const auto& o : shape->objects()) f.obj_map[o.id] = at;
    for (const auto& m : shape->morphisms()) f.mor_map[m.id] = id_at;
    return f;
}

FunctorData inclusion_functor(const CatPtr& sub, const CatPtr& ambient) {
    FunctorData f;
    f.source = sub;
    f.target = ambient;
    for (const auto& o : sub->objects()) f.obj_map[o.id] = o.id;
    for (const auto& m : sub->morphisms()) f.mor_map[m.id] = m.id;
    return f;
}

CatPtr full_subcategory(const CatPtr& ambient, const std::vector<ObjId>& objects) {
    FinCategory::Builder b;
    std::set<ObjId> keep(objects.begin(), objects.end());
    for (ObjId o : keep) b.object(o, ambient->object(o).name);
    std::set<MorId> mors;
    for (const auto& m : ambient->morphisms())
        if (keep.count(m.dom) && keep.count(m.cod)) {
            b.morphism(m.id, m.dom, m.cod, m.name);
            mors.insert(m.id);
        }
    for (ObjId o : keep) b.identity(o, ambient->identity_of(o));
    for (MorId g : mors)
        for (MorId f : mors) {
            if (ambient->dom(g) != ambient->cod(f)) continue;
            auto gf = ambient->compose_opt(g, f);
            if (gf) b.compose(g, f, *gf);
        }
    return b.build();
}

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

CheckReport validate_category(const FinCategory& c) {
    CheckReport r;
    r.check_id = "cat.axioms";
    for (const auto& o : c.objects()) {
        if (!c.has_identity_of(o.id)) {
            r.fail("missing-identity", "object " + std::to_string(o.id));
            continue;
        }
        MorId i = c.identity_of(o.id);
        if (!c.has_morphism(i) || c.dom(i) != o.id || c.cod(i) != o.id)
            r.fail("bad-identity", "object " + std::to_string(o.id));
    }
    // table defined exactly on composable pairs, with the right endpoints
    for (const auto& g : c.morphisms())
        for (const auto& f : c.morphisms()) {
            auto gf = c.compose_opt(g.id, f.id);
            bool composable = (f.cod == g.dom);
            r.bump("pairs-scanned");
            if (composable && !gf)
                r.fail("partial-table",
                       "no entry for (" + std::to_string(g.id) + "," + std::to_string(f.id) + ")");
            if (!composable && gf)
                r.fail("spurious-entry",
                       "(" + std::to_string(g.id) + "," + std::to_string(f.id) + ")");
            if (composable && gf) {
                if (!c.has_morphism(*gf) || c.dom(*gf) != f.dom || c.cod(*gf) != g.cod)
                    r.fail("bad-endpoints", "(" + std::to_string(g.id) + "," +
                                                std::to_string(f.id) + ") -> " +
                                                std::to_string(*gf));
            }
        }
    if (!r.pass) return r; // identity/associativity checks need a sane table
    for (const auto& f : c.morphisms()) {
        if (!c.has_identity_of(f.dom) || !c.has_identity_of(f.cod)) continue;
        if (c.compose(f.id, c.identity_of(f.dom)) != f.id)
            r.fail("right-identity", "morphism " + std::to_string(f.id));
        if (c.compose(c.identity_of(f.cod), f.id) != f.id)
            r.fail("left-identity", "morphism " + std::to_string(f.id));
    }
    for (const auto& h : c.morphisms())
        for (const auto& g : c.morphisms()) {
            if (g.cod != h.dom) continue;
            MorId hg = c.compose(h.id, g.id);
            for (MorId f : c.morphisms_into(g.dom)) {
                r.bump("triples-scanned");
                if (c.compose(h.id, c.compose(g.id, f)) != c.compose(hg, f))
                    r.fail("associativity", "(" + std::to_string(h.id) + "," +
                                                std::to_string(g.id) + "," + std::to_string(f) +
                                                ")");
            }
        }
    return r;
}

CheckReport validate_functor(const FunctorData& f) {
    CheckReport r;
    r.check_id = "cat.functor-laws";
    const FinCategory& s = *f.source;
    const FinCategory& t = *f.target;
    for (const auto& o : s.objects())
        if (!f.obj_map.count(o.id) || !t.has_object(f.obj_map.at(o.id)))
            r.fail("object-map", "object " + std::to_string(o.id));
    for (const auto& m : s.morphisms()) {
        if (!f.mor_map.count(m.id) || !t.has_morphism(f.mor_map.at(m.id))) {
            r.fail("morphism-map", "morphism " + std::to_string(m.id));
            continue;
        }
        MorId fm = f.mor_map.at(m.id);
        if (t.dom(fm) != f.obj_map.at(m.dom) || t.cod(fm) != f.obj_map.at(m.cod))
            r.fail("endpoints", "morphism " + std::to_string(m.id));
    }
    if (!r.pass) return r;
    for (const auto& o : s.objects())
        if (f.mor_map.at(s.identity_of(o.id)) != t.identity_of(f.obj_map.at(o.id)))
            r.fail("identity", "object " + std::to_string(o.id));
    for (const auto& g : s.morphisms())
        for (const auto& m : s.morphisms()) {
            if (m.cod != g.dom) continue;
            r.bump("pairs-scanned");
            MorId lhs = f.mor_map.at(s.compose(g.id, m.id));
            MorId rhs = t.compose(f.mor_map.at(g.id), f.mor_map.at(m.id));
            if (lhs != rhs)
                r.fail("composition",
                       "(" + std::to_string(g.id) + "," + std::to_string(m.id) + ")");
        }
    return r;
}

CheckReport validate_nat_trans(const NatTransData& n) {
    CheckReport r;
    r.check_id = "cat.naturality";
    const FinCategory& s = *n.source.source;
    const FinCategory& t = *n.source.target;
    for (const auto& o : s.objects()) {
        if (!n.components.count(o.id)) {
            r.fail("missing-component", "object " + std::to_string(o.id));
            continue;
        }
        MorId c = n.components.at(o.id);
        if (t.dom(c) != n.source.obj_map.at(o.id) || t.cod(c) != n.target.obj_map.at(o.id))
            r.fail("component-endpoints", "object " + std::to_string(o.id));
    }
    if (!r.pass) return r;
    for (const auto& m : s.morphisms()) {
        r.bump("squares-checked");
        MorId lhs = t.compose(n.components.at(m.cod), n.source.mor_map.at(m.id));
        MorId rhs = t.compose(n.target.mor_map.at(m.id), n.components.at(m.dom));
        if (lhs != rhs) r.fail("naturality-square", "morphism " + std::to_string(m.id));
    }
    return r;
}

// ---------------------------------------------------------------------------
// comma categories
// ---------------------------------------------------------------------------

CommaResult comma_category(const FunctorData& f, const FunctorData& g) {
    if (f.target.get() != g.target.get()) throw Fault("comma_category: targets differ");
    const FinCategory& a = *f.source;
    const FinCategory& b = *g.source;
    const FinCategory& c = *f.target;

    CommaResult out;
    FinCategory::Builder builder;
    std::map<std::tuple<ObjId, ObjId, MorId>, ObjId> obj_of;
    ObjId next_obj = 0;
    for (const auto& ao : a.objects())
        for (const auto& bo : b.objects())
            for (MorId alpha : c.hom(f.obj_map.at(ao.id), g.obj_map.at(bo.id))) {
                obj_of[{ao.id, bo.id, alpha}] = next_obj;
                builder.object(next_obj, "(" + std::to_string(ao.id) + "," +
                                             std::to_string(bo.id) + "," + std::to_string(alpha) +
                                             ")");
                out.object_desc.emplace_back(ao.id, bo.id, alpha);
                ++next_obj;
            }

    struct CMor {
        ObjId dom, cod;
        MorId af, bg; // component arrows in A and B
    };
    std::vector<CMor> cmors;
    std::map<std::tuple<ObjId, ObjId, MorId, MorId>, MorId> mor_of;
    MorId next_mor = 0;
    for (const auto& [src, sid] : obj_of) {
        auto [a1, b1, al1] = src;
        for (const auto& [dst, did] : obj_of) {
            auto [a2, b2, al2] = dst;
            for (MorId am : a.hom(a1, a2))
                for (MorId bm : b.hom(b1, b2)) {
                    // square: alpha2 . F(am) == G(bm) . alpha1
                    if (c.compose(al2, f.mor_map.at(am)) == c.compose(g.mor_map.at(bm), al1)) {
                        mor_of[{sid, did, am, bm}] = next_mor;
                        cmors.push_back({sid, did, am, bm});
                        builder.morphism(next_mor, sid, did,
                                         "(" + std::to_string(am) + "," + std::to_string(bm) +
                                             ")");
                        ++next_mor;
                    }
                }
        }
    }
    for (const auto& [src, sid] : obj_of) {
        auto [ai, bi, al] = src;
        (void)al;
        builder.identity(sid, mor_of.at({sid, sid, a.identity_of(ai), b.identity_of(bi)}));
    }
    for (MorId gi = 0; gi < (MorId)cmors.size(); ++gi)
        for (MorId fi = 0; fi < (MorId)cmors.size(); ++fi) {
            if (cmors[fi].cod != cmors[gi].dom) continue;
            MorId am = a.compose(cmors[gi].af, cmors[fi].af);
            MorId bm = b.compose(cmors[gi].bg, cmors[fi].bg);
            builder.compose(gi, fi, mor_of.at({cmors[fi].dom, cmors[gi].cod, am, bm}));
        }
    out.category = builder.build();

    out.proj_left.source = out.category;
    out.proj_left.target = f.source;
    out.proj_right.source = out.category;
    out.proj_right.target = g.source;
    for (const auto& [src, sid] : obj_of) {
        out.proj_left.obj_map[sid] = std::get<0>(src);
        out.proj_right.obj_map[sid] = std::get<1>(src);
    }
    for (MorId mi = 0; mi < (MorId)cmors.size(); ++mi) {
        out.proj_left.mor_map[mi] = cmors[mi].af;
        out.proj_right.mor_map[mi] = cmors[mi].bg;
    }
    return out;
}

// ---------------------------------------------------------------------------
// limits and colimits by exhaustive cone search
// ---------------------------------------------------------------------------

namespace {

// Streaming enumerator for commuting cones over one diagram (limit
// direction: legs apex -> F(i); colimit direction: legs F(i) -> apex).
// Cone spaces can be huge on categories with fat hom-sets, so nothing is
// stored: visitors see a legs vector indexed by shape-object position.
class ConeSpace {
public:
    ConeSpace(const DiagramData& d, bool limit_dir)
        : d_(d), amb_(*d.functor.target), limit_dir_(limit_dir) {
        for (const auto& o : d.shape->objects()) {
            index_[o.id] = (int)sobjs_.size();
            sobjs_.push_back(o.id);
        }
        checks_.resize(sobjs_.size());
        for (const auto& m : d.shape->morphisms()) {
            int di = index_.at(m.dom), ci = index_.at(m.cod);
            checks_[std::max(di, ci)].push_back({di, ci, d.functor.mor_map.at(m.id)});
        }
    }

    int n_objects() const { return (int)sobjs_.size(); }
    ObjId shape_obj(int i) const { return sobjs_[i]; }

    // visit(legs) -> bool: return false to stop the whole enumeration
    template <class F>
    void for_each(ObjId apex, F&& visit) const {
        std::vector<MorId> legs(sobjs_.size(), -1);
        rec(apex, 0, legs, visit);
    }

    long long count(ObjId apex) const {
        long long n = 0;
        for_each(apex, [&](const std::vector<MorId>&) {
            ++n;
            return true;
        });
        return n;
    }

    ConeData to_cone(ObjId apex, const std::vector<MorId>& legs) const {
        ConeData c;
        c.apex = apex;
        c.is_limit = limit_dir_;
        for (std::size_t i = 0; i < sobjs_.size(); ++i) c.legs[sobjs_[i]] = legs[i];
        return c;
    }

    // factorizations of the cone `legs` (apex `from_apex`) through `cand`;
    // stops counting at 2
    int factor_count(const ConeData& cand, ObjId other_apex,
                     const std::vector<MorId>& other_legs) const {
        ObjId from = limit_dir_ ? other_apex : cand.apex;
        ObjId to = limit_dir_ ? cand.apex : other_apex;
        int found = 0;
        for (MorId u : amb_.hom(from, to)) {
            bool ok = true;
            for (std::size_t i = 0; i < sobjs_.size(); ++i) {
                MorId leg = cand.legs.at(sobjs_[i]);
                MorId lhs = limit_dir_ ? amb_.compose(leg, u) : amb_.compose(u, leg);
                if (lhs != other_legs[i]) { ok = false; break; }
            }
            if (ok && ++found > 1) break;
        }
        return found;
    }

private:
    struct Check {
        int dom_ix, cod_ix;
        MorId image;
    };

    template <class F>
    bool rec(ObjId apex, std::size_t k, std::vector<MorId>& legs, F& visit) const {
        if (k == sobjs_.size()) return visit(const_cast<const std::vector<MorId>&>(legs));
        ObjId fj = d_.functor.obj_map.at(sobjs_[k]);
        const auto& cands = limit_dir_ ? amb_.hom(apex, fj) : amb_.hom(fj, apex);
        for (MorId leg : cands) {
            legs[k] = leg;
            bool ok = true;
            for (const auto& ch : checks_[k]) {
                MorId ld = legs[ch.dom_ix], lc = legs[ch.cod_ix];
                if (limit_dir_) {
                    if (amb_.compose(ch.image, ld) != lc) { ok = false; break; }
                } else {
                    if (amb_.compose(lc, ch.image) != ld) { ok = false; break; }
                }
            }
            if (ok && !rec(apex, k + 1, legs, visit)) return false;
        }
        legs[k] = -1;
        return true;
    }

    const DiagramData& d_;
    const FinCategory& amb_;
    bool limit_dir_;
    std::vector<ObjId> sobjs_;
    std::map<ObjId, int> index_;
    std::vector<std::vector<Check>> checks_;
};

std::optional<LimitResult> universal_cone(const DiagramData& d, bool limit_dir) {
    const FinCategory& amb = *d.functor.target;
    ConeSpace cs(d, limit_dir);

    CheckReport rep;
    rep.check_id = limit_dir ? "cat.limit" : "cat.colimit";

    // Cone counts per apex. A universal cone with apex A induces a bijection
    // between hom(B, A) (resp. hom(A, B)) and cones with apex B, so equality
    // of those cardinalities for every B is a sound apex prefilter; the
    // survivors still get the full exhaustive factorization check.
    std::vector<ObjId> apexes;
    std::map<ObjId, long long> n_cones;
    long long total = 0;
    for (const auto& o : amb.objects()) {
        apexes.push_back(o.id);
        n_cones[o.id] = cs.count(o.id);
        total += n_cones[o.id];
    }
    rep.counts["cones"] = total;

    std::vector<ObjId> candidates;
    for (ObjId a : apexes) {
        if (n_cones[a] == 0) continue;
        bool ok = true;
        for (ObjId b : apexes) {
            long long homsz = limit_dir ? (long long)amb.hom(b, a).size()
                                        : (long long)amb.hom(a, b).size();
            if (homsz != n_cones[b]) { ok = false; break; }
        }
        if (ok) candidates.push_back(a);
    }
    rep.counts["apex-candidates"] = (long long)candidates.size();

    // probe cones: the lexicographically first cone on each inhabited apex
    std::vector<std::pair<ObjId, std::vector<MorId>>> probes;
    for (ObjId a : apexes) {
        if (n_cones[a] == 0) continue;
        cs.for_each(a, [&](const std::vector<MorId>& legs) {
            probes.emplace_back(a, legs);
            return false;
        });
    }

    // cones on one apex enumerate in lexicographic leg order and apexes are
    // scanned in id order, so the first fully verified cone is the tie-break
    // winner (least apex id, then lexicographic legs)
    for (ObjId a : candidates) {
        std::optional<LimitResult> found;
        cs.for_each(a, [&](const std::vector<MorId>& legs) {
            ConeData cand = cs.to_cone(a, legs);
            for (const auto& [pa, plegs] : probes)
                if (cs.factor_count(cand, pa, plegs) != 1) return true;
            // full exhaustive verification, streamed over every cone
            bool ok = true;
            long long verified = 0;
            for (ObjId b : apexes) {
                if (!ok) break;
                cs.for_each(b, [&](const std::vector<MorId>& olegs) {
                    ++verified;
                    if (cs.factor_count(cand, b, olegs) != 1) {
                        ok = false;
                        return false;
                    }
                    return true;
                });
            }
            if (!ok) return true;
            LimitResult res;
            res.cone = cand;
            res.report = rep;
            res.report.counts["factorizations-verified"] = verified;
            found = std::move(res);
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

} // namespace

std::optional<LimitResult> limit(const DiagramData& d) { return universal_cone(d, true); }
std::optional<LimitResult> colimit(const DiagramData& d) { return universal_cone(d, false); }

std::optional<MorId> factor_through(const DiagramData& d, const ConeData& universal,
                                    const ConeData& other) {
    const FinCategory& amb = *d.functor.target;
    bool limit_dir = universal.is_limit;
    ObjId from = limit_dir ? other.apex : universal.apex;
    ObjId to = limit_dir ? universal.apex : other.apex;
    std::optional<MorId> found;
    for (MorId u : amb.hom(from, to)) {
        bool ok = true;
        for (const auto& [j, leg] : universal.legs) {
            MorId lhs = limit_dir ? amb.compose(leg, u) : amb.compose(u, leg);
            if (lhs != other.legs.at(j)) { ok = false; break; }
        }
        if (ok) {
            if (found) return std::nullopt;
            found = u;
        }
    }
    return found;
}

// ---------------------------------------------------------------------------
// canonical (co)density diagrams and (co)density checks
// ---------------------------------------------------------------------------

namespace {

// category whose objects are arrows x -> V (under) or V -> x (over), V in W
CanonicalDiagram canonical(const SubcatSpec& w, const CatPtr& ambient, ObjId x, bool under) {
    const FinCategory& c = *ambient;
    std::set<ObjId> wset(w.objects.begin(), w.objects.end());
    for (ObjId o : w.objects)
        if (!c.has_object(o)) throw Fault("subcategory object " + std::to_string(o) + " missing");

    std::vector<std::pair<ObjId, MorId>> aobjs; // (V, arrow)
    for (ObjId v : wset)
        for (MorId s : (under ? c.hom(x, v) : c.hom(v, x))) aobjs.emplace_back(v, s);
    std::sort(aobjs.begin(), aobjs.end());

    FinCategory::Builder b;
    for (std::size_t i = 0; i < aobjs.size(); ++i)
        b.object((ObjId)i, "arrow" + std::to_string(aobjs[i].second));
    struct AMor {
        ObjId dom, cod;
        MorId f;
    };
    std::vector<AMor> amors;
    std::map<std::tuple<ObjId, ObjId, MorId>, MorId> mor_of;
    for (std::size_t i = 0; i < aobjs.size(); ++i)
        for (std::size_t j = 0; j < aobjs.size(); ++j)
            for (MorId f : c.hom(aobjs[i].first, aobjs[j].first)) {
                bool commutes = under ? (c.compose(f, aobjs[i].second) == aobjs[j].second)
                                      : (c.compose(aobjs[j].second, f) == aobjs[i].second);
                if (!commutes) continue;
                MorId id = (MorId)amors.size();
                mor_of[{(ObjId)i, (ObjId)j, f}] = id;
                amors.push_back({(ObjId)i, (ObjId)j, f});
                b.morphism(id, (ObjId)i, (ObjId)j);
            }
    for (std::size_t i = 0; i < aobjs.size(); ++i)
        b.identity((ObjId)i, mor_of.at({(ObjId)i, (ObjId)i, c.identity_of(aobjs[i].first)}));
    for (MorId gi = 0; gi < (MorId)amors.size(); ++gi)
        for (MorId fi = 0; fi < (MorId)amors.size(); ++fi) {
            if (amors[fi].cod != amors[gi].dom) continue;
            MorId comp = c.compose(amors[gi].f, amors[fi].f);
            b.compose(gi, fi, mor_of.at({amors[fi].dom, amors[gi].cod, comp}));
        }

    CanonicalDiagram out;
    out.diagram.shape = b.build();
    out.diagram.functor.source = out.diagram.shape;
    out.diagram.functor.target = ambient;
    for (std::size_t i = 0; i < aobjs.size(); ++i)
        out.diagram.functor.obj_map[(ObjId)i] = aobjs[i].first;
    for (MorId mi = 0; mi < (MorId)amors.size(); ++mi)
        out.diagram.functor.mor_map[mi] = amors[mi].f;
    out.canonical.apex = x;
    out.canonical.is_limit = under;
    for (std::size_t i = 0; i < aobjs.size(); ++i)
        out.canonical.legs[(ObjId)i] = aobjs[i].second;
    return out;
}

CheckReport density_check(const SubcatSpec& w, const CatPtr& ambient, bool codense) {
    CheckReport r;
    r.check_id = codense ? "cat.codense" : "cat.dense";
    for (const auto& o : ambient->objects()) {
        CanonicalDiagram cd =
            codense ? diagram_under(w, ambient, o.id) : diagram_over(w, ambient, o.id);
        auto uni = codense ? limit(cd.diagram) : colimit(cd.diagram);
        r.bump("objects-checked");
        if (!uni) {
            r.fail("no-" + std::string(codense ? "limit" : "colimit"),
                   "object " + ambient->obj_label(o.id));
            continue;
        }
        // the canonical cone must factor through the universal one by an iso
        auto u = factor_through(cd.diagram, uni->cone, cd.canonical);
        if (!u || !ambient->is_iso(*u))
            r.fail("comparison-not-iso", "object " + ambient->obj_label(o.id) +
                                             (u ? " via " + std::to_string(*u) : " (no factor)"));
    }
    return r;
}

} // namespace

CanonicalDiagram diagram_under(const SubcatSpec& w, const CatPtr& ambient, ObjId x) {
    return canonical(w, ambient, x, true);
}
CanonicalDiagram diagram_over(const SubcatSpec& w, const CatPtr& ambient, ObjId x) {
    return canonical(w, ambient, x, false);
}

CheckReport is_codense(const SubcatSpec& w, const CatPtr& ambient) {
    return density_check(w, ambient, true);
}
CheckReport is_dense(const SubcatSpec& w, const CatPtr& ambient) {
    return density_check(w, ambient, false);
}

} // namespace fibkan::cat
