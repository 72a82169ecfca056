#pragma once

// Shadow paths and the Conway-Lagarias tiling invariant.
//
// A closed path weaves at step i when steps i-1 and i+1 are parallel and
// winds otherwise. A shadow of the path is a closed path of the same length
// that winds exactly where the original weaves and vice versa; its signed
// area is the unrescaled invariant I(R) = 3 * (right stones - left stones).
//
// Given the shadow's first two steps the rest of it is forced. The second
// step fixes the shadow's chirality: choosing it the other way yields the
// mirror-image path with negated area. A seed is "orientation preserving"
// when the shadow turns the same way as the original at the first vertex;
// all three such seeds give I(R) from a class-0 basepoint and -I(R) from a
// class-1 basepoint. The other three give the negations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tribone/lattice.hpp"
#include "tribone/region.hpp"

namespace tribone {

enum class StepKind : std::uint8_t { weave, wind, spur_site };

// Cyclic classification. Spur steps are reported as spur_site; the other
// steps are classified on the path with its spurs removed. Throws
// non_isolated_spur.
std::vector<StepKind> classify_steps(const Word& w);

struct ShadowSeed {
    Step first;
    Step second;
    friend bool operator==(const ShadowSeed&, const ShadowSeed&) = default;
};

// The six (first, second) choices for shadowing w. The seed always refers to
// the first two steps of the spur-free part of the shadow.
std::vector<ShadowSeed> all_seeds(const Word& w);
bool preserves_orientation(const Word& w, ShadowSeed seed);
std::vector<ShadowSeed> oriented_seeds(const Word& w);
// First step b (or b' from a class-1 vertex), second step chosen to
// preserve orientation. For the (3,3)-benzel read from its rightmost corner
// this is (b, a').
ShadowSeed default_seed(const Word& w);
// The origin, or (1,0) when w starts from a class-1 vertex.
Point default_shadow_base(const Word& w);

// Throws invalid_params (basepoint class differs from w.base, bad seed),
// non_isolated_spur, or shadow_not_closed when the forced continuation does
// not close up into a valid shadow.
Word shadow_word(const Word& w, Point basepoint, ShadowSeed seed);
Word shadow_word(const Word& w);

std::vector<StepKind> flipped(const std::vector<StepKind>& kinds);

struct InvariantValue {
    // I(R), the signed area of the shadow.
    std::int64_t unrescaled = 0;

    bool rescaled_integral() const { return unrescaled % 3 == 0; }
    // i(R) = I(R) / 3; exact only when rescaled_integral().
    std::int64_t rescaled_numerator() const { return unrescaled; }
    static constexpr std::int64_t rescaled_denominator = 3;
    std::string rescaled_string() const;

    friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
};

// Invariant of a closed boundary word of a simply connected region, using an
// orientation-preserving seed and correcting the sign for class-1 starts.
InvariantValue cl_invariant_of_boundary(const Word& boundary);
// Traces r's boundary from a class-0 vertex and shadows it with the default
// seed from the origin.
InvariantValue cl_invariant_path(const Region& r);

// Cell count of the (a,b)-benzel from its parameters.
std::int64_t area_formula(const BenzelParams& p);
InvariantValue cl_invariant_formula(const BenzelParams& p);

// k >= 2 with {a, b} = {k(3k-1)/2, k(3k+1)/2}, if any.
std::optional<std::int64_t> is_pentagonal_pair(std::int64_t a, std::int64_t b);

}  // namespace tribone
