#pragma once

#include <optional>
#include <utility>

#include "kummerlab/cyclotomic.hpp"

namespace kummerlab {

/// The four notions for a local unit, with witnesses. The booleans always
/// satisfy pth_power => p_primary => primaire => primar.
struct ClassificationReport {
    bool is_pth_power = false;
    bool is_p_primary = false;
    bool is_primaire = false;
    bool is_primar = false;
    int level = 0;               // 1-unit filtration level, capped at p+1
    u64 teichmuller_residue = 0; // in [1, p-1]
    std::optional<u64> primaire_witness;                  // a mod p^k with x = a (mod p)
    std::optional<std::pair<u64, u64>> primar_witnesses;  // (t mod p, b mod p)
    long precision_used = 0; // N
};

struct TeichSplit {
    u64 residue = 0;    // x mod pi, in [1, p-1]
    CycloElem one_unit; // x / <residue>, an element of U_1
};

// x = <a> * one_unit exactly; throws NotAUnit.
TeichSplit teich_split(const CycloElem& x);

// min(p+1, v_pi(one_unit - 1)); requires N >= p+1.
int unit_class_level(const CycloElem& x);

// x = a (mod p) for a p-adic unit a. In the zeta-power basis this says the
// coefficients of zeta..zeta^(p-2) vanish mod p; the witness is the constant
// coefficient.
std::pair<bool, std::optional<u64>> is_primaire(const CycloElem& x);

// x = a (mod pi^2) and x * sigma_{-1}(x) = b (mod p) for p-adic units a, b.
std::pair<bool, std::optional<std::pair<u64, u64>>> is_primar(const CycloElem& x);

ClassificationReport classify(const CycloElem& x);

} // namespace kummerlab
