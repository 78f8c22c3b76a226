#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "motivic/local_series.hpp"
#include "motivic/series.hpp"

namespace motivic {

// References to the local series a stratum carries: a builtin punctual
// series for a cyclic action, the smooth-point series for an orbit of
// length M, or an explicitly given series.
struct origin_series_ref {
    unsigned M;
    long long N;
    equivariant_variant variant;
};

struct smooth_point_ref {
    unsigned M;
};

using local_series_ref = std::variant<origin_series_ref, smooth_point_ref, series>;

// One constructible stratum of the quotient: its class, the local series at
// its points, and the orbit scale applied as T -> T^scale.
struct stratum {
    polynomial cls;
    local_series_ref local;
    unsigned scale = 1;
};

struct stratification {
    std::vector<stratum> strata;
    unsigned order = 0;
};

inline series resolve_local(const local_series_ref& ref, unsigned order) {
    if (const auto* o = std::get_if<origin_series_ref>(&ref))
        return origin_local_series(group_action(o->M, o->N, o->variant), order);
    if (const auto* s = std::get_if<smooth_point_ref>(&ref))
        return smooth_point_series(s->M, order);
    const series& given = std::get<series>(ref);
    if (given.order() < order)
        throw std::invalid_argument("explicit stratum series is shorter than the assembly order");
    series out(order);
    for (unsigned k = 0; k <= order; ++k) out[k] = given[k];
    return out;
}

// Global generating series as the product over strata of
// (local(T^scale))^{class}. Strata with class 0 contribute the identity,
// and two strata with equal local data multiply like one stratum carrying
// the sum of their classes.
inline series assemble(const stratification& spec) {
    if (spec.strata.empty())
        throw std::invalid_argument("stratification must contain at least one stratum");
    series acc = series::one(spec.order);
    for (const auto& st : spec.strata) {
        if (st.scale < 1) throw std::invalid_argument("stratum scale must be >= 1");
        series local = resolve_local(st.local, spec.order);
        if (!local[0].is_one()) throw non_unit_constant_term();
        acc *= pow(substitute_power(local, st.scale), st.cls);
    }
    return acc;
}

// Surface with d fixed points of A_{M-1} type and a free part of class
// free_cls: the d punctual factors times the free factor, every factor
// already carrying the T^M scaling.
inline series corollary_surface(unsigned M, unsigned d, const polynomial& free_cls,
                                equivariant_variant variant, unsigned order) {
    series fixed = closed_form_theorem2(M, variant, support_kind::origin, order);
    series acc = pow(fixed, polynomial(d));
    acc *= pow(smooth_point_series(M, order), free_cls);
    return acc;
}

/* Z_3 on the projective plane by (x0 : x1 : x2) -> (x0 : s x1 : s^2 x2):
 * three fixed points with the A_2 local model, and a free part whose
 * quotient class is L^2 + L - 2 (the three torus orbit strata of the
 * quotient, minus the fixed points).
 */
inline series example_cp2_z3(unsigned order) {
    polynomial free_cls =
        polynomial::lefschetz(2) + polynomial::lefschetz(1) - polynomial(2);
    return corollary_surface(3, 3, free_cls, equivariant_variant::birational, order);
}

}  // namespace motivic
