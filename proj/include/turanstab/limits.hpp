#pragma once

namespace turanstab {

/// Size guards for the exponential searches: exceeding one raises
/// CapabilityError instead of hanging. Configuration, not hard-coded magic.
struct SearchLimits {
    /// Largest homomorphism-source / chromatic-number input.
    int pattern_vertices = 20;
    /// Largest graph scanned automatically for a K_{p+1} before certifying.
    /// Beyond this the caller asserts freeness; a hidden clique is still caught
    /// whenever the majorization produces more than p parts.
    int clique_check_vertices = 256;
    /// Exhaustive partition enumeration caps: p <= 3 and p >= 4.
    int oracle_vertices_small_p = 14;
    int oracle_vertices_large_p = 12;

    int oracle_vertices(int p) const {
        return p <= 3 ? oracle_vertices_small_p : oracle_vertices_large_p;
    }
};

}  // namespace turanstab
