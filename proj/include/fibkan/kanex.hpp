#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fibkan/fincat.hpp"
#include "fibkan/report.hpp"

namespace fibkan::kan {

using cat::CatPtr;
using cat::ConeData;
using cat::FunctorData;
using cat::MorId;
using cat::NatTransData;
using cat::ObjId;
using cat::SubcatSpec;

struct MonadData {
    FunctorData carrier;  // T
    NatTransData unit;    // eta : 1 => T
    NatTransData mult;    // mu : T^2 => T
};

struct ComonadData {
    FunctorData carrier;  // L
    NatTransData counit;  // eps : L => 1
    NatTransData comult;  // delta : L => L^2
};

struct AlgebraWitness {
    ObjId object;
    MorId structure; // u : TA -> A, inverse to eta_A in the idempotent case
};

struct KanResult {
    FunctorData extension;
    NatTransData mediating; // counit RG => G for right, unit G => LG for left
    std::map<ObjId, ConeData> cones; // per-object universal-cone certificates
    CheckReport report;
};

CheckReport validate_monad(const MonadData& m);
CheckReport validate_comonad(const ComonadData& c);

// Pointwise right (left) Kan extension of g along itself, with the induced
// codensity monad (density comonad). Faults when a required (co)limit is
// missing, naming the object.
std::pair<KanResult, MonadData> right_kan_self(const FunctorData& g);
std::pair<KanResult, ComonadData> left_kan_self(const FunctorData& g);

// Runs the four equivalent idempotency criteria (mult iso, unit-whiskered
// isos, whiskering equality) independently and asserts their verdicts agree.
CheckReport is_idempotent_monad(const MonadData& m);
CheckReport is_idempotent_comonad(const ComonadData& c);

struct AlgebraResult {
    std::vector<ObjId> objects;
    std::vector<AlgebraWitness> witnesses;
};

// Objects whose unit (counit) component is an isomorphism; requires an
// idempotent monad (comonad). The result is closed under isomorphism.
AlgebraResult algebra_objects(const MonadData& m);
AlgebraResult coalgebra_objects(const ComonadData& c);

enum class Side { left, right };

struct HullResult {
    CheckReport report;
    std::vector<ObjId> hull_objects;
    std::optional<ComonadData> comonad; // populated for side = left when total
    std::optional<MonadData> monad;     // populated for side = right when total
};

// Certifies the strong coreflective (left) or reflective (right) hull of the
// full subcategory on `w`: the (co)density (co)monad exists, is idempotent,
// its mediating components are W-monic (W-epic), and W is dense (codense) in
// the (co)algebra subcategory. Missing (co)limits, non-idempotency and
// non-mediating failures are reported with witnesses.
HullResult certify_strong_hull(const SubcatSpec& w, const CatPtr& ambient, Side side);

} // namespace fibkan::kan
