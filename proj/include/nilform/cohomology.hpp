#pragma once

#include <optional>

#include "nilform/presentation.hpp"

namespace nilform {

struct SampleCheck {
    Assignment at;
    std::vector<int> betti;
    bool matches_generic = true;
};

struct CohomologyReport {
    std::vector<int> betti;   // b_0 .. b_n
    std::vector<int> rank_d;  // rank of d_k: Lambda^k -> Lambda^{k+1}
    int euler = 0;
    bool generic = false;  // computed over the rational function field
    std::optional<Assignment> specialization;
    std::vector<SampleCheck> samples;
    // Positive rational roots of Bareiss pivot polynomials: candidate
    // parameter values where a rank might drop (superset, not exact).
    std::vector<Rational> exceptional_candidates;
};

// Exact Betti numbers; generic over the parameter field when the
// presentation carries parameters, verified at each sample assignment.
CohomologyReport betti(const Presentation& p, const std::vector<Assignment>& samples = {});

// Basis of ker d_k, canonical (reduced-echelon kernel, blade order).
std::vector<Form> closed_basis(const Presentation& p, int k);

struct RepresentativeReport {
    bool pass = true;
    std::vector<std::pair<Form, Form>> not_closed;  // rep, d(rep)
    bool independent_mod_exact = true;
};

// Closedness plus independence modulo exact forms.
RepresentativeReport verify_representatives(const Presentation& p, int k,
                                            const std::vector<Form>& reps);

// The matrix of d_k over the presentation's scalars, rows indexed by
// (k+1)-blades and columns by k-blades (ascending mask order), entries
// cleared to polynomials row-scaling-equivalently.
Matrix<Poly> differential_matrix(const Presentation& p, int k);

}  // namespace nilform
