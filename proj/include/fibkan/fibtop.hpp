#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fibkan/bits.hpp"
#include "fibkan/fincat.hpp"
#include "fibkan/report.hpp"

namespace fibkan::top {

// A finite topological space, stored as the minimal open neighborhood of
// each point. Finite spaces are Alexandroff, so this representation is
// lossless: opens are exactly the up-closed sets of the specialization
// preorder (x <= y iff x lies in the closure of {y}), and up(x) = {y : x <= y}.
// Explicit open families are accepted and produced at the boundary.
class FinTopSpace {
public:
    FinTopSpace() = default;

    static FinTopSpace discrete(int n);
    static FinTopSpace indiscrete(int n);
    static FinTopSpace point() { return discrete(1); }
    static FinTopSpace empty() { return discrete(0); }
    static FinTopSpace sierpinski(); // {0,1} with {1} open

    // validates the topology axioms on an explicit family; on failure the
    // report names the violation and no space is returned
    static std::optional<FinTopSpace> from_opens(int n, const std::vector<Bits>& opens,
                                                 CheckReport& rep);
    // coarsest topology containing the given sets as opens
    static FinTopSpace generated_by(int n, const std::vector<Bits>& subbasis);
    // reflexive-transitive `up` rows; validated
    static FinTopSpace from_up_rows(std::vector<Bits> up);

    int size() const { return (int)up_.size(); }
    const Bits& min_open(int x) const { return up_[x]; }
    bool leq(int x, int y) const { return up_[x].test(y); } // x in cl{y}
    Bits down(int x) const;                                 // cl{x}

    bool is_open(const Bits& s) const;
    bool is_closed(const Bits& s) const;
    Bits closure(const Bits& s) const;
    Bits interior(const Bits& s) const;

    // all opens as up-sets, ascending bitmask order; exponential in size()
    std::vector<Bits> all_opens() const;
    std::vector<Bits> all_closeds() const;

    bool is_t1() const; // discrete specialization order
    bool is_discrete() const { return is_t1(); }

    struct Subspace {
        FinTopSpace space;
        std::vector<int> points; // new point -> old point
    };
    Subspace subspace(const Bits& pts) const;

    bool operator==(const FinTopSpace& o) const { return up_ == o.up_; }
    bool operator!=(const FinTopSpace& o) const { return !(*this == o); }
    std::string key() const;

private:
    std::vector<Bits> up_;
};

bool continuous(const FinTopSpace& x, const FinTopSpace& y, const std::vector<int>& f);
bool homeomorphic(const FinTopSpace& a, const FinTopSpace& b);
std::vector<std::vector<int>> all_continuous_maps(const FinTopSpace& x, const FinTopSpace& y);

// A fibrewise space: total space, base and a continuous projection.
struct FibSpace {
    FinTopSpace total;
    FinTopSpace base;
    std::vector<int> proj;

    int size() const { return total.size(); }
    Bits fiber(int b) const;
    std::string key() const;
    bool operator==(const FibSpace& o) const {
        return total == o.total && base == o.base && proj == o.proj;
    }
};

FibSpace make_fib_space(FinTopSpace total, FinTopSpace base, std::vector<int> proj);
FibSpace over_point(FinTopSpace total);          // base = one point
FibSpace base_as_identity(const FinTopSpace& b); // B over itself
// the one-point fibrewise subspace of the base at b
FibSpace point_fiber_space(const FinTopSpace& base, int b);

// Fibrewise map: point map commuting with projections, continuous.
using PointMap = std::vector<int>;
bool fib_map_ok(const FibSpace& x, const FibSpace& y, const PointMap& f);
std::vector<PointMap> all_fib_maps(const FibSpace& x, const FibSpace& y);
long long count_fib_maps(const FibSpace& x, const FibSpace& y);
bool fib_homeomorphic(const FibSpace& a, const FibSpace& b);

// ---------------------------------------------------------------------------
// constructions
// ---------------------------------------------------------------------------

// coarsest topology making every listed map out of the carrier continuous
FinTopSpace initial_topology(int n_points,
                             const std::vector<std::pair<const FinTopSpace*, PointMap>>& maps_out);
// finest topology making every listed map into the carrier continuous
FinTopSpace final_topology(int n_points,
                           const std::vector<std::pair<const FinTopSpace*, PointMap>>& maps_in);

struct ProductFib {
    FibSpace space;
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> index;
};
// fibrewise product: pairs with equal projection, subspace of the plain product
ProductFib product_over_B(const FibSpace& x, const FibSpace& y);

struct QuotientResult {
    FibSpace space;
    PointMap class_of; // point of x -> quotient point
};
// classes must sit inside single fibers; quotient carries the final topology
QuotientResult quotient_fibrewise(const FibSpace& x, const std::vector<Bits>& classes);
QuotientResult quotient_by_class_map(const FibSpace& x, const PointMap& class_of);

struct PullbackResult {
    FibSpace space;
    std::vector<int> points; // new point -> old point
};
// restriction of x to the fibers over a subset of base points
PullbackResult pullback_base(const FibSpace& x, const Bits& base_pts);

struct CoproductFib {
    FibSpace space;
    std::vector<std::pair<int, int>> origin; // new point -> (piece, old point)
};
CoproductFib coproduct_fib(const std::vector<FibSpace>& pieces);

// finite diagrams of fibrewise spaces over one base
struct FibDiagram {
    cat::CatPtr shape;
    std::map<cat::ObjId, FibSpace> objects;
    std::map<cat::MorId, PointMap> arrows;
};
struct FibLimit {
    FibSpace space;
    std::map<cat::ObjId, PointMap> legs;
    std::vector<std::vector<int>> tuples;
};
struct FibColimit {
    FibSpace space;
    std::map<cat::ObjId, PointMap> legs;
};
FibLimit limit_fib(const FibDiagram& d);     // initial topology over the set limit
FibColimit colimit_fib(const FibDiagram& d); // final topology over the set colimit

// ---------------------------------------------------------------------------
// predicates
// ---------------------------------------------------------------------------

// closed-map test; fibers of a finite-space map are compact automatically,
// which the report records next to the verdict
CheckReport is_proper(const FinTopSpace& x, const FinTopSpace& y, const PointMap& f);
bool closed_map(const FinTopSpace& x, const FinTopSpace& y, const PointMap& f);

bool fib_compact(const FibSpace& x);   // proper projection
bool fib_hausdorff(const FibSpace& x); // same-fiber points separated by opens
bool fib_compact_hausdorff(const FibSpace& x);

enum class SepAxiom { fibT1, fibT2, fibUrysohn, fibRegular, diagonalClosed, fibCompact };
CheckReport separation_predicate(const FibSpace& x, SepAxiom axiom);

// Witness search over finer topologies on image point-sets: a non-closed
// subset admitting a fibrewise compact Hausdorff refinement over some open
// of the base flips the verdict. The reduction is recorded in the report.
CheckReport is_weak_hausdorff(const FibSpace& x, int size_bound);

// Test spaces are fibrewise compact Hausdorff with at most size_bound points
// (enumerated up to homeomorphism); preimages of the diagonal must be closed.
CheckReport is_k_hausdorff(const FibSpace& x, int size_bound);

// Characterization via fibrewise compact subspaces; requires a T1 base and a
// fibrewise Hausdorff space, faulting otherwise with a pointer to the generic
// coreflector.
CheckReport is_compactly_generated(const FibSpace& x);

// ---------------------------------------------------------------------------
// Alexandroff correspondence
// ---------------------------------------------------------------------------

struct PreorderData {
    int n = 0;
    std::vector<Bits> up; // up[x] = {y : x <= y}; reflexive, transitive
};
PreorderData specialization_preorder(const FinTopSpace& x);
FinTopSpace alexandroff_of(const PreorderData& p);

// ---------------------------------------------------------------------------
// tube lemma
// ---------------------------------------------------------------------------

// open V around x0 with V x_B K inside o (o lives in product_over_B(x, k));
// preconditions (k fibrewise compact, the slice through x0 inside o) fault
std::optional<Bits> tube_witness(const FibSpace& x, const FibSpace& k, int x0,
                                 const Bits& o_in_product);

} // namespace fibkan::top
