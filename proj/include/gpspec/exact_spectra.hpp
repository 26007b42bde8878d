#pragma once

#include "gpspec/products.hpp"
#include "gpspec/spectrum.hpp"

namespace gpspec {

// Closed-form spectra of a product from factor spectra. All three return the
// |G|*|H| pairwise combinations, ascending.
//   cartesian: a + b     direct: a * b     strong: a + b + a * b
Spectrum compose_degree_spectrum(ProductKind kind, const Spectrum& d_g, const Spectrum& d_h);
Spectrum compose_adjacency_spectrum(ProductKind kind, const Spectrum& lam_g,
                                    const Spectrum& lam_h);

// Laplacian eigenvalues of G □ H are the pairwise sums mu_g + mu_h. No such
// formula is known for the direct or strong product.
Spectrum compose_cartesian_laplacian(const Spectrum& mu_g, const Spectrum& mu_h);

}  // namespace gpspec
