#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fibkan/report.hpp"

namespace fibkan::cat {

using ObjId = int;
using MorId = int;

// A finite category given by an explicit composition table. Object and
// morphism ids are opaque non-negative integers; names are metadata only.
// Construction does not enforce the category axioms (validate_category
// reports violations), but id references must resolve.
class FinCategory {
public:
    struct Obj {
        ObjId id;
        std::string name;
    };
    struct Mor {
        MorId id;
        ObjId dom, cod;
        std::string name;
    };

    class Builder {
    public:
        Builder& object(ObjId id, std::string name = "");
        Builder& morphism(MorId id, ObjId dom, ObjId cod, std::string name = "");
        Builder& identity(ObjId obj, MorId mor);
        Builder& compose(MorId g, MorId f, MorId gf);
        std::shared_ptr<const FinCategory> build() const;

    private:
        std::vector<Obj> objects_;
        std::vector<Mor> morphisms_;
        std::map<ObjId, MorId> identity_;
        std::unordered_map<std::uint64_t, MorId> table_;
    };

    const std::vector<Obj>& objects() const { return objects_; }
    const std::vector<Mor>& morphisms() const { return morphisms_; }
    bool has_object(ObjId o) const { return obj_ix_.count(o) != 0; }
    bool has_morphism(MorId m) const { return mor_ix_.count(m) != 0; }
    const Obj& object(ObjId o) const { return objects_.at(obj_ix_.at(o)); }
    const Mor& morphism(MorId m) const { return morphisms_.at(mor_ix_.at(m)); }
    ObjId dom(MorId m) const { return morphism(m).dom; }
    ObjId cod(MorId m) const { return morphism(m).cod; }
    MorId identity_of(ObjId o) const;
    bool has_identity_of(ObjId o) const { return identity_.count(o) != 0; }

    // nullopt when the pair is non-composable or the table has no entry
    std::optional<MorId> compose_opt(MorId g, MorId f) const;
    MorId compose(MorId g, MorId f) const; // Fault on missing entry

    const std::vector<MorId>& hom(ObjId a, ObjId b) const;
    std::vector<MorId> morphisms_from(ObjId a) const;
    std::vector<MorId> morphisms_into(ObjId b) const;

    bool is_iso(MorId f) const;
    std::optional<MorId> inverse(MorId f) const;
    bool objects_isomorphic(ObjId a, ObjId b) const;

    std::string obj_label(ObjId o) const;
    std::string mor_label(MorId m) const;

private:
    friend class Builder;
    FinCategory() = default;
    void freeze();

    std::vector<Obj> objects_;
    std::vector<Mor> morphisms_;
    std::map<ObjId, MorId> identity_;
    std::unordered_map<std::uint64_t, MorId> table_;
    std::unordered_map<ObjId, std::size_t> obj_ix_;
    std::unordered_map<MorId, std::size_t> mor_ix_;
    std::map<std::pair<ObjId, ObjId>, std::vector<MorId>> hom_;
    static std::uint64_t key(MorId g, MorId f) {
        return (std::uint64_t(std::uint32_t(g)) << 32) | std::uint32_t(f);
    }
};

using CatPtr = std::shared_ptr<const FinCategory>;

// A functor between explicit finite categories, given by its object and
// morphism assignments.
struct FunctorData {
    CatPtr source;
    CatPtr target;
    std::map<ObjId, ObjId> obj_map;
    std::map<MorId, MorId> mor_map;

    ObjId on_obj(ObjId o) const { return obj_map.at(o); }
    MorId on_mor(MorId m) const { return mor_map.at(m); }
};

struct NatTransData {
    FunctorData source; // F
    FunctorData target; // G, parallel to F
    std::map<ObjId, MorId> components; // object of F.source -> morphism of F.target
    MorId at(ObjId o) const { return components.at(o); }
};

struct DiagramData {
    CatPtr shape;
    FunctorData functor; // functor.source == shape
};

struct ConeData {
    ObjId apex;
    std::map<ObjId, MorId> legs; // shape object -> morphism in ambient
    bool is_limit = true;        // limit cone (legs out of apex) vs colimit cone
};

FunctorData identity_functor(const CatPtr& c);
FunctorData compose_functors(const FunctorData& g, const FunctorData& f); // g after f
FunctorData constant_functor(const CatPtr& shape, const CatPtr& target, ObjId at);
FunctorData inclusion_functor(const CatPtr& sub, const CatPtr& ambient);

CheckReport validate_category(const FinCategory& c);
CheckReport validate_functor(const FunctorData& f);
CheckReport validate_nat_trans(const NatTransData& n);

// Full subcategory on the listed objects of an ambient category.
CatPtr full_subcategory(const CatPtr& ambient, const std::vector<ObjId>& objects);

struct CommaResult {
    CatPtr category;
    FunctorData proj_left;  // P : F/G -> source of F
    FunctorData proj_right; // Q : F/G -> source of G
    // comma object id -> (object of F's source, object of G's source, arrow in the common target)
    std::vector<std::tuple<ObjId, ObjId, MorId>> object_desc;
};

// Comma category F/G: objects are arrows F(a) -> G(b), morphisms are
// commuting squares. Fault when F and G do not share a target.
CommaResult comma_category(const FunctorData& f, const FunctorData& g);

struct LimitResult {
    ConeData cone;
    CheckReport report;
};

// Terminal (resp. initial) cone, found by exhausting apex/leg candidates and
// verifying unique factorization against every other cone. Ties between
// isomorphic answers break to the least apex id, then lexicographic legs.
std::optional<LimitResult> limit(const DiagramData& d);
std::optional<LimitResult> colimit(const DiagramData& d);

// Unique factoring morphism of `other` through a verified (co)limit cone;
// nullopt when none or more than one exists.
std::optional<MorId> factor_through(const DiagramData& d, const ConeData& universal,
                                    const ConeData& other);

struct SubcatSpec {
    std::vector<ObjId> objects;
};

// Checks whether every ambient object is the limit of its canonical diagram
// X -> W-objects under X; dually (dense) with comma objects over X.
CheckReport is_codense(const SubcatSpec& w, const CatPtr& ambient);
CheckReport is_dense(const SubcatSpec& w, const CatPtr& ambient);

// Canonical diagram of W-objects under X (arrows X -> V) or over X (V -> X),
// together with the canonical cone of X above/below it.
struct CanonicalDiagram {
    DiagramData diagram;
    ConeData canonical; // apex X with legs the arrow-objects themselves
};
CanonicalDiagram diagram_under(const SubcatSpec& w, const CatPtr& ambient, ObjId x);
CanonicalDiagram diagram_over(const SubcatSpec& w, const CatPtr& ambient, ObjId x);

} // namespace fibkan::cat
