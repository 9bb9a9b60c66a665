#ifndef QPROOF_FAMILIES_HPP_
#define QPROOF_FAMILIES_HPP_

#include "qproof/expansion.hpp"
#include "qproof/qbf.hpp"

namespace qproof {

/// The n-block ladder family. Prefix E e1, A u1, E c1 c2 e2, A u2, ... with
/// e(i) = 4(i-1)+1, u(i) = 4(i-1)+2, c(2i-1) = 4(i-1)+3, c(2i) = 4(i-1)+4.
/// Clause order: (u_i v c_2i), (-e_i v c_2i-1) for each i, the long clause
/// over all -c_j, then (e_i v c_2i), (-u_i v c_2i-1) for each i.
Qbf gen_phi(int n);

/// Deterministic instantiation-calculus refutation of gen_phi(n): per block,
/// right to left, both polarities of the block's universal are instantiated,
/// so both of the block's definition clauses become load-bearing.
ExpansionProof gen_phi_proof(int n);

/// The four-block example formula A u1, E e2, A u3, E e4 e5 (ids 1..5).
Qbf gen_psi0();

/// Its bundled eleven-step instantiation-calculus refutation.
ExpansionProof gen_psi0_proof();

}  // namespace qproof

#endif  // QPROOF_FAMILIES_HPP_
