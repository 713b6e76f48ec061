// Shared helpers for the test binaries: deterministic random structure
// families over rank-2 bases, plus hand-built control families with known
// pass/fail status.
#pragma once

#include <random>
#include <vector>

#include "core/structure.hpp"

namespace testutil {

using namespace dainfty;

// Three rank-2 basis flavors so the random families exercise vertical,
// horizontal and mixed windows.
inline BigradedBasis rank2_basis(int flavor) {
    BigradedBasis basis;
    basis.add("a", {0, 0});
    switch (flavor % 3) {
        case 0:
            basis.add("b", {0, 1});  // vertical: m01, m02, m03, m04 live
            break;
        case 1:
            basis.add("b", {-1, 0});  // horizontal: m11, m02 live
            break;
        default:
            basis.add("b", {-1, -1});  // mixed: m02, m12 live
            break;
    }
    return basis;
}

// Random family with horizontal <= 2, arity <= 4, coefficients in {-1,0,1}:
// every homogeneously-allowed entry gets an independent random coefficient.
inline StructureFamily random_family(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-1, 1);

    StructureFamily fam;
    fam.basis = rank2_basis(static_cast<int>(seed));
    fam.convention = Convention::sagave;
    fam.max_horizontal = 2;
    fam.max_arity = 4;

    for (int i = 0; i <= 2; ++i) {
        for (int j = 1; j <= 4; ++j) {
            GradedMap m;
            m.arity = j;
            m.degree = fam.expected_degree(i, j);
            for (const TensorWord& w : all_words(fam.basis, j)) {
                Bidegree target = word_degree(w, fam.basis) + m.degree;
                LinComb value;
                for (int idx = 0; idx < fam.basis.size(); ++idx) {
                    if (fam.basis.degree(idx) != target) continue;
                    int c = coeff(rng);
                    if (c != 0) value.add({idx}, c, fam.ring);
                }
                if (!value.is_zero()) m.set(w, value);
            }
            if (!m.is_zero()) fam.set_map(i, j, std::move(m));
        }
    }
    fam.validate();
    return fam;
}

// A two-generator differential graded algebra: m01(a) = b, m02(a(x)a) = a,
// m02(a(x)b) = b.  Passes every window.
inline StructureFamily dga_control() {
    StructureFamily fam;
    fam.basis.add("a", {0, 0});
    fam.basis.add("b", {0, 1});
    fam.convention = Convention::sagave;
    fam.max_horizontal = 2;
    fam.max_arity = 4;

    GradedMap m01;
    m01.arity = 1;
    m01.degree = {0, 1};
    LinComb vb;
    vb.add({1}, 1, fam.ring);
    m01.set({0}, vb);
    fam.set_map(0, 1, std::move(m01));

    GradedMap m02;
    m02.arity = 2;
    m02.degree = {0, 0};
    LinComb va;
    va.add({0}, 1, fam.ring);
    m02.set({0, 0}, va);
    m02.set({0, 1}, vb);
    fam.set_map(0, 2, std::move(m02));

    fam.validate();
    return fam;
}

// dga_control with the Leibniz rule deliberately broken.
inline StructureFamily broken_dga_control() {
    StructureFamily fam = dga_control();
    LinComb neg;
    neg.add({1}, -1, fam.ring);
    fam.maps.at({0, 2}).set({0, 1}, neg);
    return fam;
}

// Zero maps over a rank-2 basis.
inline StructureFamily zero_family() {
    StructureFamily fam;
    fam.basis = rank2_basis(0);
    fam.max_horizontal = 2;
    fam.max_arity = 4;
    return fam;
}

}  // namespace testutil
